#include "msp/bounds.hpp"

#include <algorithm>

#include "msp/errors.hpp"

namespace msp {

BoundKind parse_bound(const std::string& name) {
    if (name == "none") return BoundKind::none;
    if (name == "fernandez") return BoundKind::fernandez;
    if (name == "fujita") return BoundKind::fujita;
    throw ParseError("unknown bound '" + name + "' (expected fernandez, fujita, or none)");
}

std::string bound_name(BoundKind kind) {
    switch (kind) {
        case BoundKind::none: return "none";
        case BoundKind::fernandez: return "fernandez";
        case BoundKind::fujita: return "fujita";
    }
    return "?";
}

BoundContext build_context(const TaskGraph& g, const PartialSolution& x, int T) {
    int n = g.vertex_count();
    std::vector<int> rank = topological_order(g);
    std::vector<int> by_rank(n + 1);
    for (int v = 1; v <= n; ++v) by_rank[rank[v]] = v;

    BoundContext ctx;
    ctx.horizon = T;
    ctx.mn_end.assign(n + 1, 0);
    ctx.mx_start.assign(n + 1, 0);

    for (int r = 1; r <= n; ++r) {
        int v = by_rank[r];
        if (x.placed(v)) {
            ctx.mn_end[v] = x.placement[v].start + g.weight(v);
            continue;
        }
        int ready = 0;
        for (int u : g.predecessors(v)) ready = std::max(ready, ctx.mn_end[u]);
        ctx.mn_end[v] = ready + g.weight(v);
    }

    for (int r = n; r >= 1; --r) {
        int v = by_rank[r];
        if (x.placed(v)) {
            ctx.mx_start[v] = x.placement[v].start;
            continue;
        }
        int latest = T;
        for (int w : g.successors(v)) latest = std::min(latest, ctx.mx_start[w]);
        ctx.mx_start[v] = latest - g.weight(v);
    }

    ctx.events.reserve(2 * n);
    ctx.events.insert(ctx.events.end(), ctx.mn_end.begin() + 1, ctx.mn_end.end());
    ctx.events.insert(ctx.events.end(), ctx.mx_start.begin() + 1, ctx.mx_start.end());
    std::sort(ctx.events.begin(), ctx.events.end());
    ctx.events.erase(std::unique(ctx.events.begin(), ctx.events.end()), ctx.events.end());
    return ctx;
}

int min_density(const BoundContext& ctx, const TaskGraph& g, int t_i, int t_j) {
    int total = 0;
    for (int u = 1; u <= g.vertex_count(); ++u) {
        if (ctx.mn_end[u] <= t_i) continue;      // can finish before the interval
        if (ctx.mx_start[u] >= t_j) continue;    // can start after it
        total += std::min({ctx.mn_end[u] - t_i, g.weight(u), t_j - ctx.mx_start[u], t_j - t_i});
    }
    return total;
}

namespace {

std::vector<int> interval_endpoints(const BoundContext& ctx) {
    std::vector<int> pts = ctx.events;
    pts.push_back(0);
    pts.push_back(ctx.horizon);
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    return pts;
}

// One full sweep of the event grid: feed every interval's density to fold.
template <typename Fold>
void sweep_intervals(const BoundContext& ctx, const TaskGraph& g, Fold fold) {
    std::vector<int> pts = interval_endpoints(ctx);
    for (size_t i = 0; i + 1 < pts.size(); ++i)
        for (size_t j = i + 1; j < pts.size(); ++j)
            fold(pts[i], pts[j], min_density(ctx, g, pts[i], pts[j]));
}

int ceil_div(int a, int b) {
    return a > 0 ? (a + b - 1) / b : a / b;  // b > 0
}

int machines_lower_ctx(const BoundContext& ctx, const TaskGraph& g) {
    int best = 0;
    sweep_intervals(ctx, g, [&](int t_i, int t_j, int density) {
        best = std::max(best, ceil_div(density, t_j - t_i));
    });
    return best;
}

} // namespace

int machines_lower(const TaskGraph& g, const PartialSolution& x, int T) {
    BoundContext ctx = build_context(g, x, T);
    return machines_lower_ctx(ctx, g);
}

int base_horizon(const TaskGraph& g, const PartialSolution& x) {
    return std::max(critical_path_length(g), partial_makespan(g, x));
}

BoundEval fernandez_eval(const TaskGraph& g, const PartialSolution& x, int m) {
    int t0 = base_horizon(g, x);
    BoundContext ctx = build_context(g, x, t0);
    int q = 0;
    sweep_intervals(ctx, g, [&](int t_i, int t_j, int density) {
        q = std::max(q, ceil_div(density, m) - (t_j - t_i));
    });
    return {t0 + q, 1};
}

BoundEval fujita_eval(const TaskGraph& g, const PartialSolution& x, int m) {
    int t0 = base_horizon(g, x);
    BoundEval r;

    auto feasible = [&](int T) {
        ++r.sweeps;
        BoundContext ctx = build_context(g, x, T);
        return machines_lower_ctx(ctx, g) <= m;
    };

    if (feasible(t0)) {
        r.value = t0;
        return r;
    }
    int delta = 1;
    while (!feasible(t0 + delta)) delta *= 2;

    // Largest infeasible horizon lies in [t0 + delta/2, t0 + delta).
    int lo = t0 + delta / 2;  // known infeasible (t0 itself when delta == 1)
    int hi = t0 + delta;      // known feasible
    while (hi - lo > 1) {
        int mid = lo + (hi - lo) / 2;
        if (feasible(mid))
            hi = mid;
        else
            lo = mid;
    }
    r.value = hi;  // lo is the largest horizon needing more than m machines
    return r;
}

int fernandez_bound(const TaskGraph& g, const PartialSolution& x, int m) {
    return fernandez_eval(g, x, m).value;
}

int fujita_bound(const TaskGraph& g, const PartialSolution& x, int m) {
    return fujita_eval(g, x, m).value;
}

BoundEval evaluate_bound(BoundKind kind, const TaskGraph& g, const PartialSolution& x, int m) {
    switch (kind) {
        case BoundKind::none: return {base_horizon(g, x), 0};
        case BoundKind::fernandez: return fernandez_eval(g, x, m);
        case BoundKind::fujita: return fujita_eval(g, x, m);
    }
    return {};
}

} // namespace msp
