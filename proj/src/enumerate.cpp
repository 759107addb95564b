#include "latpoly/enumerate.hpp"

#include <omp.h>

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdlib>
#include <unordered_set>

namespace latpoly {

const char* model_name(Model m) {
    switch (m) {
        case Model::tree: return "tree";
        case Model::animal: return "animal";
        case Model::walk: return "walk";
    }
    return "?";
}

const char* constraint_name(Constraint c) {
    switch (c) {
        case Constraint::translation_classes: return "translation-classes";
        case Constraint::contains_origin: return "contains-origin";
        case Constraint::half_space: return "half-space";
        case Constraint::lex_star: return "lex-star";
        case Constraint::bridge: return "bridge";
    }
    return "?";
}

const char* convention_name(AnimalConvention c) {
    return c == AnimalConvention::site ? "site" : "subgraph";
}

Model model_from_name(const std::string& s) {
    if (s == "tree") return Model::tree;
    if (s == "animal") return Model::animal;
    if (s == "walk") return Model::walk;
    throw std::invalid_argument("unknown model: " + s);
}

Constraint constraint_from_name(const std::string& s) {
    if (s == "translation-classes") return Constraint::translation_classes;
    if (s == "contains-origin") return Constraint::contains_origin;
    if (s == "half-space") return Constraint::half_space;
    if (s == "lex-star") return Constraint::lex_star;
    if (s == "bridge") return Constraint::bridge;
    throw std::invalid_argument("unknown constraint: " + s);
}

AnimalConvention convention_from_name(const std::string& s) {
    if (s == "site") return AnimalConvention::site;
    if (s == "subgraph") return AnimalConvention::subgraph;
    throw std::invalid_argument("unknown animal convention: " + s);
}

void validate_spec(const EnsembleSpec& spec) {
    if (spec.dim < 2 || spec.dim > kMaxDim)
        throw std::invalid_argument("dimension must be in [2,4]");
    if (spec.n < 1) throw std::invalid_argument("n must be >= 1");
    if (spec.n > 1000) throw std::invalid_argument("n too large for coordinate packing");
    if (spec.constraint == Constraint::bridge && spec.model != Model::walk)
        throw std::invalid_argument("bridge constraint is walk-only");
    if (spec.constraint == Constraint::lex_star && spec.model == Model::walk)
        throw std::invalid_argument("lex-star constraint is tree/animal-only");
}

int resolve_threads(int threads) {
    if (threads > 0) return threads;
    if (const char* env = std::getenv("LATPOLY_THREADS")) {
        int t = std::atoi(env);
        if (t > 0) return t;
    }
    return omp_get_max_threads();
}

std::int64_t span_threshold(int n) {
    if (n <= 1) return n;
    double l = std::log(static_cast<double>(n));
    return static_cast<std::int64_t>(std::floor(n / (l * l)));
}

BigInt SurfaceProfile::total() const {
    BigInt t = 0;
    for (const BigInt& c : counts) t += c;
    return t;
}

BigInt SpanStats::total() const {
    BigInt t = 0;
    for (const BigInt& c : histogram) t += c;
    return t;
}

namespace {

// ---------------------------------------------------------------------
// Connected-site-set scan (untried-set method over a constraint region)
// ---------------------------------------------------------------------

struct Region {
    Constraint constraint;
    int dim;
    int box;  // |coordinate| bound

    bool contains(const Site& s) const {
        for (int i = 0; i < dim; ++i)
            if (s.c[i] > box || s.c[i] < -box) return false;
        switch (constraint) {
            case Constraint::contains_origin:
                return true;
            case Constraint::half_space:
                return s.c[0] >= 0;
            case Constraint::translation_classes:
                return !(s < kOrigin);
            case Constraint::lex_star:
                return s.c[0] != 0 || !(s < kOrigin);
            default:
                return true;
        }
    }
};

struct Budget {
    std::atomic<std::uint64_t>* global = nullptr;
    std::atomic<bool>* abort = nullptr;
    std::uint64_t max_nodes = 0;
    std::uint64_t local = 0;

    // Returns false once the shared budget is exhausted.
    bool note() {
        ++local;
        if (max_nodes == 0) return true;
        if ((local & 0xfffu) == 0) {
            std::uint64_t total = global->fetch_add(0x1000u) + 0x1000u;
            if (total > max_nodes) {
                abort->store(true, std::memory_order_relaxed);
            }
        }
        return !abort->load(std::memory_order_relaxed);
    }
    void flush() {
        if (max_nodes != 0) global->fetch_add(local & 0xfffu);
    }
};

struct SetCtx {
    Region region;
    int n = 0;
    std::vector<Site> chosen;
    std::unordered_set<std::uint64_t> considered;
    Budget budget;
    bool aborted = false;
};

template <class Emit>
void extend_sets(SetCtx& ctx, std::vector<Site> untried, Emit&& emit) {
    while (!untried.empty()) {
        if (!ctx.budget.note()) {
            ctx.aborted = true;
            return;
        }
        Site c = untried.back();
        untried.pop_back();
        ctx.chosen.push_back(c);
        if (static_cast<int>(ctx.chosen.size()) == ctx.n) {
            emit(std::span<const Site>(ctx.chosen));
        } else {
            std::vector<Site> next = untried;
            Site added[2 * kMaxDim];
            int n_added = 0;
            for (int axis = 0; axis < ctx.region.dim; ++axis)
                for (int sgn : {1, -1}) {
                    Site nb = c;
                    nb.c[axis] += sgn;
                    if (!ctx.region.contains(nb)) continue;
                    if (ctx.considered.insert(site_key(nb)).second) {
                        next.push_back(nb);
                        added[n_added++] = nb;
                    }
                }
            extend_sets(ctx, std::move(next), emit);
            for (int i = 0; i < n_added; ++i) ctx.considered.erase(site_key(added[i]));
        }
        ctx.chosen.pop_back();
        if (ctx.aborted) return;
        // `c` stays marked as considered: excluded for the rest of this
        // branch, unmarked by whichever level first reached it.
    }
}

struct SetTask {
    std::vector<Site> chosen;
    std::vector<Site> untried;
    std::vector<std::uint64_t> considered;
};

void collect_set_tasks(SetCtx& ctx, std::vector<Site> untried, int split_depth,
                       std::vector<SetTask>& tasks) {
    while (!untried.empty()) {
        Site c = untried.back();
        untried.pop_back();
        ctx.chosen.push_back(c);
        std::vector<Site> next = untried;
        Site added[2 * kMaxDim];
        int n_added = 0;
        for (int axis = 0; axis < ctx.region.dim; ++axis)
            for (int sgn : {1, -1}) {
                Site nb = c;
                nb.c[axis] += sgn;
                if (!ctx.region.contains(nb)) continue;
                if (ctx.considered.insert(site_key(nb)).second) {
                    next.push_back(nb);
                    added[n_added++] = nb;
                }
            }
        if (static_cast<int>(ctx.chosen.size()) == split_depth) {
            SetTask t;
            t.chosen = ctx.chosen;
            t.untried = next;
            t.considered.assign(ctx.considered.begin(), ctx.considered.end());
            tasks.push_back(std::move(t));
        } else {
            collect_set_tasks(ctx, std::move(next), split_depth, tasks);
        }
        for (int i = 0; i < n_added; ++i) ctx.considered.erase(site_key(added[i]));
        ctx.chosen.pop_back();
    }
}

// Runs per_set(sites, acc) over every connected region subset of size n
// containing the origin. Accumulators are one-per-task, merged by the
// caller in task order so results are independent of the thread count.
template <class Acc, class PerSet>
void scan_connected_sets(const EnsembleSpec& spec, int threads, const EnumLimits& limits,
                         std::vector<Acc>& accs, PerSet per_set) {
    Region region{spec.constraint, spec.dim, spec.n};
    std::atomic<std::uint64_t> nodes{0};
    std::atomic<bool> abort{false};
    const int split_depth = std::min(spec.n - 1, spec.dim == 2 ? 5 : 4);
    threads = resolve_threads(threads);

    auto make_ctx = [&] {
        SetCtx ctx;
        ctx.region = region;
        ctx.n = spec.n;
        ctx.budget = Budget{&nodes, &abort, limits.max_nodes, 0};
        ctx.considered.insert(site_key(kOrigin));
        return ctx;
    };

    if (threads <= 1 || split_depth < 2) {
        accs.resize(1);
        SetCtx ctx = make_ctx();
        extend_sets(ctx, {kOrigin}, [&](std::span<const Site> s) { per_set(s, accs[0]); });
        ctx.budget.flush();
        if (ctx.aborted) throw ResourceLimitError(nodes.load());
        return;
    }

    std::vector<SetTask> tasks;
    {
        SetCtx ctx = make_ctx();
        collect_set_tasks(ctx, {kOrigin}, split_depth, tasks);
    }
    accs.resize(tasks.size());
    bool any_abort = false;
#pragma omp parallel for num_threads(threads) schedule(dynamic) reduction(|| : any_abort)
    for (std::size_t i = 0; i < tasks.size(); ++i) {
        SetCtx ctx;
        ctx.region = region;
        ctx.n = spec.n;
        ctx.budget = Budget{&nodes, &abort, limits.max_nodes, 0};
        ctx.chosen = tasks[i].chosen;
        ctx.considered.insert(tasks[i].considered.begin(), tasks[i].considered.end());
        extend_sets(ctx, tasks[i].untried, [&](std::span<const Site> s) { per_set(s, accs[i]); });
        ctx.budget.flush();
        any_abort = any_abort || ctx.aborted;
    }
    if (any_abort) throw ResourceLimitError(nodes.load());
}

// ---------------------------------------------------------------------
// Walk scan (stepwise depth-first search)
// ---------------------------------------------------------------------

struct WalkCtx {
    int dim = 0;
    int n = 0;
    Constraint constraint = Constraint::contains_origin;
    std::vector<Site> pts;
    Budget budget;
    bool aborted = false;

    bool step_ok(const Site& s) const {
        switch (constraint) {
            case Constraint::half_space:
                return s.c[0] >= 0;
            case Constraint::bridge:
                return s.c[dim - 1] >= 1;
            default:
                return true;
        }
    }
    bool occupied(const Site& s) const {
        for (const Site& p : pts)
            if (p == s) return true;
        return false;
    }
    bool final_ok() const {
        if (constraint != Constraint::bridge) return true;
        const int axis = dim - 1;
        std::int32_t last = pts.back().c[axis];
        for (const Site& p : pts)
            if (p.c[axis] > last) return false;
        return true;
    }
};

template <class Emit>
void extend_walks(WalkCtx& ctx, Emit&& emit) {
    if (static_cast<int>(ctx.pts.size()) == ctx.n + 1) {
        if (ctx.final_ok()) emit(ctx.pts);
        return;
    }
    for (int axis = 0; axis < ctx.dim; ++axis)
        for (int sgn : {1, -1}) {
            Site nb = ctx.pts.back();
            nb.c[axis] += sgn;
            if (!ctx.step_ok(nb) || ctx.occupied(nb)) continue;
            if (!ctx.budget.note()) {
                ctx.aborted = true;
                return;
            }
            ctx.pts.push_back(nb);
            extend_walks(ctx, emit);
            ctx.pts.pop_back();
            if (ctx.aborted) return;
        }
}

void collect_walk_tasks(WalkCtx& ctx, int split_depth, std::vector<std::vector<Site>>& tasks) {
    if (static_cast<int>(ctx.pts.size()) == split_depth + 1) {
        tasks.push_back(ctx.pts);
        return;
    }
    for (int axis = 0; axis < ctx.dim; ++axis)
        for (int sgn : {1, -1}) {
            Site nb = ctx.pts.back();
            nb.c[axis] += sgn;
            if (!ctx.step_ok(nb) || ctx.occupied(nb)) continue;
            ctx.pts.push_back(nb);
            collect_walk_tasks(ctx, split_depth, tasks);
            ctx.pts.pop_back();
        }
}

template <class Acc, class PerWalk>
void scan_walks(const EnsembleSpec& spec, int threads, const EnumLimits& limits,
                std::vector<Acc>& accs, PerWalk per_walk) {
    std::atomic<std::uint64_t> nodes{0};
    std::atomic<bool> abort{false};
    const int split_depth = std::min(spec.n - 1, spec.dim == 2 ? 5 : 4);
    threads = resolve_threads(threads);

    auto make_ctx = [&] {
        WalkCtx ctx;
        ctx.dim = spec.dim;
        ctx.n = spec.n;
        ctx.constraint = spec.constraint;
        ctx.budget = Budget{&nodes, &abort, limits.max_nodes, 0};
        return ctx;
    };

    if (threads <= 1 || split_depth < 2) {
        accs.resize(1);
        WalkCtx ctx = make_ctx();
        ctx.pts = {kOrigin};
        extend_walks(ctx, [&](const std::vector<Site>& pts) { per_walk(pts, accs[0]); });
        ctx.budget.flush();
        if (ctx.aborted) throw ResourceLimitError(nodes.load());
        return;
    }

    std::vector<std::vector<Site>> tasks;
    {
        WalkCtx ctx = make_ctx();
        ctx.pts = {kOrigin};
        collect_walk_tasks(ctx, split_depth, tasks);
    }
    accs.resize(tasks.size());
    bool any_abort = false;
#pragma omp parallel for num_threads(threads) schedule(dynamic) reduction(|| : any_abort)
    for (std::size_t i = 0; i < tasks.size(); ++i) {
        WalkCtx ctx = make_ctx();
        ctx.pts = tasks[i];
        extend_walks(ctx, [&](const std::vector<Site>& pts) { per_walk(pts, accs[i]); });
        ctx.budget.flush();
        any_abort = any_abort || ctx.aborted;
    }
    if (any_abort) throw ResourceLimitError(nodes.load());
}

// ---------------------------------------------------------------------
// Spanning-structure expansion
// ---------------------------------------------------------------------

struct Dsu {
    std::vector<int> parent, sz;
    std::vector<std::pair<int, int>> trail;  // (child root, old parent size)
    int components;

    explicit Dsu(int n) : parent(n), sz(n, 1), components(n) {
        for (int i = 0; i < n; ++i) parent[i] = i;
    }
    int find(int v) const {
        while (parent[v] != v) v = parent[v];
        return v;
    }
    bool unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a == b) return false;
        if (sz[a] < sz[b]) std::swap(a, b);
        parent[b] = a;
        sz[a] += sz[b];
        trail.emplace_back(b, sz[b]);
        --components;
        return true;
    }
    void rollback(std::size_t n_unions) {
        while (n_unions--) {
            auto [b, s] = trail.back();
            trail.pop_back();
            sz[parent[b]] -= s;
            parent[b] = b;
            ++components;
        }
    }
};

struct IndexedGraph {
    std::vector<Site> sites;                     // sorted
    std::vector<Edge> edges;                     // sorted induced edges
    std::vector<std::pair<int, int>> edge_idx;   // endpoint indices

    explicit IndexedGraph(std::span<const Site> in) {
        sites.assign(in.begin(), in.end());
        std::sort(sites.begin(), sites.end());
        edges = induced_edges(sites);
        edge_idx.reserve(edges.size());
        for (const Edge& e : edges) {
            int a = static_cast<int>(std::lower_bound(sites.begin(), sites.end(), e.a) - sites.begin());
            int b = static_cast<int>(std::lower_bound(sites.begin(), sites.end(), e.b) - sites.begin());
            edge_idx.emplace_back(a, b);
        }
    }
};

void spanning_tree_rec(const IndexedGraph& g, std::size_t idx, std::vector<Edge>& chosen,
                       Dsu& dsu, const std::function<void(const std::vector<Edge>&)>& fn) {
    const std::size_t need = g.sites.size() - 1;
    if (chosen.size() == need) {
        fn(chosen);
        return;
    }
    if (g.edges.size() - idx < need - chosen.size()) return;
    auto [a, b] = g.edge_idx[idx];
    if (dsu.unite(a, b)) {
        chosen.push_back(g.edges[idx]);
        spanning_tree_rec(g, idx + 1, chosen, dsu, fn);
        chosen.pop_back();
        dsu.rollback(1);
    }
    spanning_tree_rec(g, idx + 1, chosen, dsu, fn);
}

bool remaining_can_connect(const IndexedGraph& g, std::size_t idx, Dsu& dsu) {
    std::size_t unions = 0;
    for (std::size_t i = idx; i < g.edge_idx.size() && dsu.components > 1; ++i)
        if (dsu.unite(g.edge_idx[i].first, g.edge_idx[i].second)) ++unions;
    bool ok = dsu.components == 1;
    dsu.rollback(unions);
    return ok;
}

void spanning_subgraph_rec(const IndexedGraph& g, std::size_t idx, std::vector<Edge>& chosen,
                           Dsu& dsu, const std::function<void(const std::vector<Edge>&)>& fn) {
    if (dsu.components > 1 && !remaining_can_connect(g, idx, dsu)) return;
    if (idx == g.edge_idx.size()) {
        fn(chosen);
        return;
    }
    auto [a, b] = g.edge_idx[idx];
    bool united = dsu.unite(a, b);
    chosen.push_back(g.edges[idx]);
    spanning_subgraph_rec(g, idx + 1, chosen, dsu, fn);
    chosen.pop_back();
    if (united) dsu.rollback(1);
    spanning_subgraph_rec(g, idx + 1, chosen, dsu, fn);
}

}  // namespace

BigInt spanning_tree_count(std::span<const Site> sites) {
    const int n = static_cast<int>(sites.size());
    if (n == 1) return 1;
    IndexedGraph g(sites);
    const int m = n - 1;
    std::vector<std::vector<BigInt>> a(m, std::vector<BigInt>(m, 0));
    for (auto [u, v] : g.edge_idx) {
        if (u < m) a[u][u] += 1;
        if (v < m) a[v][v] += 1;
        if (u < m && v < m) {
            a[u][v] -= 1;
            a[v][u] -= 1;
        }
    }
    // Bareiss fraction-free elimination; pivots of a reduced Laplacian of a
    // connected graph are the leading principal minors, all positive.
    BigInt prev = 1;
    for (int k = 0; k < m - 1; ++k) {
        if (a[k][k] == 0) return 0;
        for (int i = k + 1; i < m; ++i)
            for (int j = k + 1; j < m; ++j)
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
        prev = a[k][k];
    }
    return a[m - 1][m - 1];
}

void for_each_spanning_tree(std::span<const Site> sites,
                            const std::function<void(const std::vector<Edge>&)>& fn) {
    IndexedGraph g(sites);
    Dsu dsu(static_cast<int>(g.sites.size()));
    std::vector<Edge> chosen;
    spanning_tree_rec(g, 0, chosen, dsu, fn);
}

void for_each_connected_spanning_subgraph(std::span<const Site> sites,
                                          const std::function<void(const std::vector<Edge>&)>& fn) {
    IndexedGraph g(sites);
    Dsu dsu(static_cast<int>(g.sites.size()));
    std::vector<Edge> chosen;
    spanning_subgraph_rec(g, 0, chosen, dsu, fn);
}

BigInt connected_spanning_subgraph_count(std::span<const Site> sites) {
    BigInt count = 0;
    for_each_connected_spanning_subgraph(sites, [&](const std::vector<Edge>&) { ++count; });
    return count;
}

// ---------------------------------------------------------------------
// Public entry points
// ---------------------------------------------------------------------

namespace {

void merge_hist(std::vector<BigInt>& into, const std::vector<BigInt>& from) {
    if (into.size() < from.size()) into.resize(from.size(), 0);
    for (std::size_t i = 0; i < from.size(); ++i) into[i] += from[i];
}

int count_surface(std::span<const Site> sites) {
    int k = 0;
    for (const Site& s : sites)
        if (s.c[0] == 0) ++k;
    return k;
}

struct SumAcc {
    BigInt count = 0;
    std::vector<BigInt> site_hist, edge_hist, span_hist;
    void bump(std::size_t k, std::size_t eh, std::size_t sp, const BigInt& w, bool with_edges) {
        auto at = [](std::vector<BigInt>& v, std::size_t i) -> BigInt& {
            if (v.size() <= i) v.resize(i + 1, 0);
            return v[i];
        };
        count += w;
        at(site_hist, k) += w;
        at(span_hist, sp) += w;
        if (with_edges) at(edge_hist, eh) += w;
    }
};

}  // namespace

EnsembleSummary summarize(const EnsembleSpec& spec, int threads, const EnumLimits& limits) {
    validate_spec(spec);
    std::vector<SumAcc> accs;
    if (spec.model == Model::walk) {
        scan_walks(spec, threads, limits, accs, [&](const std::vector<Site>& pts, SumAcc& acc) {
            int k = count_surface(pts);
            int eh = 0;
            for (std::size_t i = 1; i < pts.size(); ++i)
                if (pts[i - 1].c[0] == 0 && pts[i].c[0] == 0) ++eh;
            acc.bump(k, eh, span_of(pts), 1, true);
        });
    } else {
        const bool trees = spec.model == Model::tree;
        const bool subgraph = spec.model == Model::animal && spec.convention == AnimalConvention::subgraph;
        scan_connected_sets(spec, threads, limits, accs, [&](std::span<const Site> sites, SumAcc& acc) {
            BigInt w = 1;
            if (trees)
                w = spanning_tree_count(sites);
            else if (subgraph)
                w = connected_spanning_subgraph_count(sites);
            acc.bump(count_surface(sites), 0, span_of(sites), w, false);
        });
    }
    EnsembleSummary out;
    for (const SumAcc& a : accs) {
        out.count += a.count;
        merge_hist(out.site_contacts, a.site_hist);
        merge_hist(out.edge_contacts, a.edge_hist);
        merge_hist(out.span_hist, a.span_hist);
    }
    return out;
}

BigInt ensemble_count(const EnsembleSpec& spec, int threads, const EnumLimits& limits) {
    return summarize(spec, threads, limits).count;
}

SurfaceProfile surface_profile(const EnsembleSpec& spec, int threads, const EnumLimits& limits) {
    if (spec.constraint != Constraint::half_space && spec.constraint != Constraint::contains_origin)
        throw std::invalid_argument(
            "surface_profile requires the half-space or contains-origin constraint");
    EnsembleSummary s = summarize(spec, threads, limits);
    return SurfaceProfile{spec.n, std::move(s.site_contacts)};
}

SurfaceProfile edge_contact_profile(const EnsembleSpec& spec, int threads, const EnumLimits& limits) {
    if (spec.model != Model::walk)
        throw std::invalid_argument("edge_contact_profile is walk-only");
    EnsembleSummary s = summarize(spec, threads, limits);
    return SurfaceProfile{spec.n, std::move(s.edge_contacts)};
}

SpanStats span_stats(const EnsembleSpec& spec, int threads, const EnumLimits& limits) {
    EnsembleSummary s = summarize(spec, threads, limits);
    SpanStats st;
    st.n = spec.n;
    st.histogram = std::move(s.span_hist);
    st.threshold = span_threshold(spec.n);
    BigInt below = 0, total = 0;
    for (std::size_t sp = 0; sp < st.histogram.size(); ++sp) {
        total += st.histogram[sp];
        if (static_cast<std::int64_t>(sp) <= st.threshold) below += st.histogram[sp];
    }
    st.below_threshold_fraction = total == 0 ? BigRat(0) : BigRat(below, total);
    return st;
}

void enumerate_polymers(const EnsembleSpec& spec,
                        const std::function<void(const Polymer&)>& fn,
                        int threads, const EnumLimits& limits) {
    validate_spec(spec);
    if (spec.model == Model::walk)
        throw std::invalid_argument("enumerate_polymers: walk ensembles stream via enumerate_walks");
    const bool trees = spec.model == Model::tree;
    const bool subgraph = spec.model == Model::animal && spec.convention == AnimalConvention::subgraph;
    std::vector<std::vector<Polymer>> accs;
    auto expand = [&](std::span<const Site> sites, std::vector<Polymer>& out) {
        std::vector<Site> sorted(sites.begin(), sites.end());
        std::sort(sorted.begin(), sorted.end());
        if (trees) {
            for_each_spanning_tree(sorted, [&](const std::vector<Edge>& edges) {
                out.push_back(Polymer{PolymerKind::tree, spec.dim, sorted, edges});
            });
        } else if (subgraph) {
            for_each_connected_spanning_subgraph(sorted, [&](const std::vector<Edge>& edges) {
                out.push_back(Polymer{PolymerKind::animal, spec.dim, sorted, edges});
            });
        } else {
            out.push_back(Polymer{PolymerKind::animal, spec.dim, sorted, induced_edges(sorted)});
        }
    };
    scan_connected_sets(spec, threads, limits, accs, expand);
    for (const auto& block : accs)
        for (const Polymer& p : block) fn(p);
}

void enumerate_walks(const EnsembleSpec& spec,
                     const std::function<void(const Walk&)>& fn,
                     int threads, const EnumLimits& limits) {
    validate_spec(spec);
    if (spec.model != Model::walk)
        throw std::invalid_argument("enumerate_walks: polymer ensembles stream via enumerate_polymers");
    std::vector<std::vector<Walk>> accs;
    scan_walks(spec, threads, limits, accs, [&](const std::vector<Site>& pts, std::vector<Walk>& out) {
        out.push_back(Walk{spec.dim, pts});
    });
    for (const auto& block : accs)
        for (const Walk& w : block) fn(w);
}

BigInt count_single_contact(int n, int dim, Model model, AnimalConvention convention, int threads) {
    if (n < 1) throw std::invalid_argument("count_single_contact: n must be >= 1");
    EnsembleSpec spec{model, dim, n, Constraint::half_space, convention};
    SurfaceProfile p = surface_profile(spec, threads);
    return p.counts.size() > 1 ? p.counts[1] : BigInt(0);
}

MultiplicativityReport supermultiplicativity_check(Model model, int dim, int limit,
                                                   AnimalConvention convention, int threads) {
    MultiplicativityReport rep{model, dim, limit, true, {}};
    const Constraint c = model == Model::walk ? Constraint::contains_origin
                                              : Constraint::translation_classes;
    std::vector<BigInt> counts(limit + 1, 0);
    for (int k = 1; k <= limit; ++k)
        counts[k] = ensemble_count(EnsembleSpec{model, dim, k, c, convention}, threads);
    for (int n = 1; n <= limit - 1; ++n)
        for (int m = n; n + m <= limit; ++m) {
            MultiplicativityRow row;
            row.n = n;
            row.m = m;
            if (model == Model::walk) {
                row.lhs = counts[n + m];
                row.rhs = counts[n] * counts[m];
            } else {
                row.lhs = counts[n] * counts[m];
                row.rhs = counts[n + m];
            }
            row.holds = row.lhs <= row.rhs;
            rep.all_hold = rep.all_hold && row.holds;
            rep.rows.push_back(std::move(row));
        }
    return rep;
}

}  // namespace latpoly
