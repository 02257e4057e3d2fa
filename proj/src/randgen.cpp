#include "msp/randgen.hpp"

#include <cmath>
#include <cstdint>
#include <limits>
#include <random>
#include <utility>
#include <vector>

#include "msp/errors.hpp"

namespace msp {

std::uint64_t split_mix64(std::uint64_t& state) {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

namespace {

// mt19937_64 plus hand-rolled draws: std::uniform_*_distribution output is
// implementation-defined, and identical seeds must mean identical instances
// on every toolchain.
class Rng {
  public:
    explicit Rng(std::uint64_t seed) : eng_(seed) {}

    int uniform(int lo, int hi) {  // inclusive, unbiased via rejection
        auto span = static_cast<std::uint64_t>(hi - lo + 1);
        std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                              std::numeric_limits<std::uint64_t>::max() % span;
        std::uint64_t r;
        do {
            r = eng_();
        } while (r >= limit);
        return lo + static_cast<int>(r % span);
    }

    double unit() { return static_cast<double>(eng_() >> 11) * 0x1.0p-53; }

  private:
    std::mt19937_64 eng_;
};

struct Sample {
    TaskGraph graph;
    double os = 0;
};

Sample sample_dag(int n, const std::vector<int>& order, const std::vector<int>& weights,
                  double p, std::uint64_t edge_seed) {
    Rng rng(edge_seed);
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (rng.unit() < p) edges.emplace_back(order[i], order[j]);
    TaskGraph g = build_graph(n, weights, edges);
    double os = order_strength(g);
    return {std::move(g), os};
}

} // namespace

GenResult generate(const GenSpec& spec) {
    if (spec.n < 2) throw ParseError("generator needs at least 2 tasks");
    if (!(spec.target_os > 0.0 && spec.target_os < 1.0))
        throw ParseError("target order strength must lie strictly between 0 and 1");
    if (spec.os_tolerance < 0.0) throw ParseError("order-strength tolerance must be nonnegative");
    if (spec.min_weight < 1 || spec.max_weight < spec.min_weight)
        throw ParseError("weight range must satisfy 1 <= min <= max");

    std::uint64_t state = spec.seed;
    const std::uint64_t label_seed = split_mix64(state);
    const std::uint64_t weight_seed = split_mix64(state);
    const std::uint64_t round_base = split_mix64(state);

    // Random topological labeling: position i in every sampled DAG is task
    // order[i], so ids carry no ordering information.
    std::vector<int> order(spec.n);
    for (int i = 0; i < spec.n; ++i) order[i] = i + 1;
    Rng label_rng(label_seed);
    for (int i = spec.n - 1; i > 0; --i)
        std::swap(order[i], order[label_rng.uniform(0, i)]);

    std::vector<int> weights(spec.n);
    Rng weight_rng(weight_seed);
    for (int& w : weights) w = weight_rng.uniform(spec.min_weight, spec.max_weight);

    // Order strength grows with the forward-edge probability; bisect it,
    // re-sampling edges each round so no single unlucky draw pins the result.
    constexpr int kRounds = 48;
    double lo = 0.0, hi = 1.0;
    Sample best;
    double best_gap = std::numeric_limits<double>::infinity();
    std::uint64_t round_state = round_base;
    for (int round = 0; round < kRounds; ++round) {
        double p = 0.5 * (lo + hi);
        Sample s = sample_dag(spec.n, order, weights, p, split_mix64(round_state));
        double achieved = s.os;

        double gap = std::abs(achieved - spec.target_os);
        if (gap < best_gap) {
            best_gap = gap;
            best = std::move(s);
        }
        if (best_gap <= spec.os_tolerance) break;
        if (achieved > spec.target_os)
            hi = p;
        else
            lo = p;
    }

    GenResult result;
    result.achieved_os = best.os;
    result.os_met = best_gap <= spec.os_tolerance;
    result.graph = normalize(best.graph);
    return result;
}

} // namespace msp
