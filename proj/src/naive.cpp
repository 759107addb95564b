#include "latpoly/naive.hpp"

#include <algorithm>
#include <unordered_map>
#include <unordered_set>

namespace latpoly {

namespace {

bool all_distinct(const std::vector<Site>& pts) {
    for (std::size_t i = 0; i < pts.size(); ++i)
        for (std::size_t j = i + 1; j < pts.size(); ++j)
            if (pts[i] == pts[j]) return false;
    return true;
}

bool walk_passes(const EnsembleSpec& spec, const std::vector<Site>& pts) {
    switch (spec.constraint) {
        case Constraint::half_space:
            return in_half_space(pts);
        case Constraint::bridge: {
            const int axis = spec.dim - 1;
            std::int32_t last = pts.back().c[axis];
            for (std::size_t i = 1; i < pts.size(); ++i) {
                std::int32_t v = pts[i].c[axis];
                if (!(v > 0 && v <= last)) return false;
            }
            return true;
        }
        default:
            return true;
    }
}

bool polymer_passes(const EnsembleSpec& spec, const Polymer& p) {
    switch (spec.constraint) {
        case Constraint::half_space:
            return in_half_space(p);
        case Constraint::translation_classes:
            return p.sites.front() == kOrigin;  // sites sorted; lex-min first
        case Constraint::lex_star:
            return in_lex_star(p);
        default:
            return true;
    }
}

bool in_box(const Site& s, int dim, int box) {
    for (int i = 0; i < dim; ++i)
        if (s.c[i] > box || s.c[i] < -box) return false;
    return true;
}

Polymer sorted_polymer(PolymerKind kind, int dim, std::vector<Site> sites, std::vector<Edge> edges) {
    std::sort(sites.begin(), sites.end());
    std::sort(edges.begin(), edges.end());
    return Polymer{kind, dim, std::move(sites), std::move(edges)};
}

}  // namespace

std::vector<Walk> naive_enumerate_walks(const EnsembleSpec& spec) {
    validate_spec(spec);
    if (spec.model != Model::walk)
        throw std::invalid_argument("naive_enumerate_walks: walk specs only");
    std::vector<Walk> out;
    const int n = spec.n;
    const int ndirs = 2 * spec.dim;
    std::vector<int> steps(n, 0);
    // Odometer over all raw step sequences; everything else is filtering.
    for (;;) {
        std::vector<Site> pts{kOrigin};
        pts.reserve(n + 1);
        for (int i = 0; i < n; ++i) {
            Site nb = pts.back();
            nb.c[steps[i] / 2] += (steps[i] % 2 == 0) ? 1 : -1;
            pts.push_back(nb);
        }
        if (all_distinct(pts) && walk_passes(spec, pts)) out.push_back(Walk{spec.dim, pts});
        int i = 0;
        while (i < n && ++steps[i] == ndirs) steps[i++] = 0;
        if (i == n) break;
    }
    return out;
}

std::vector<Polymer> naive_enumerate_polymers(const EnsembleSpec& spec) {
    validate_spec(spec);
    if (spec.model == Model::walk)
        throw std::invalid_argument("naive_enumerate_polymers: tree/animal specs only");
    const int n = spec.n;
    const int box = n;
    const bool site_animals = spec.model == Model::animal && spec.convention == AnimalConvention::site;
    const bool trees = spec.model == Model::tree;

    std::vector<Polymer> level{sorted_polymer(
        trees ? PolymerKind::tree : PolymerKind::animal, spec.dim, {kOrigin}, {})};
    std::vector<Polymer> complete;
    auto note_complete = [&](const Polymer& p) {
        if (static_cast<int>(p.sites.size()) == n) complete.push_back(p);
    };
    note_complete(level.front());

    // Trees/subgraph animals grow by edges, site animals by sites. Each
    // object is produced through many growth orders; a canonical-key set
    // keeps one copy per level.
    int rounds = site_animals ? n - 1 : spec.dim * n;  // enough levels to exhaust growth
    for (int round = 0; round < rounds && !level.empty(); ++round) {
        std::unordered_set<std::string> seen;
        std::vector<Polymer> next;
        for (const Polymer& p : level) {
            std::unordered_set<std::uint64_t> have;
            for (const Site& s : p.sites) have.insert(site_key(s));
            for (const Site& s : p.sites)
                for (int axis = 0; axis < spec.dim; ++axis)
                    for (int sgn : {1, -1}) {
                        Site nb = s;
                        nb.c[axis] += sgn;
                        if (!in_box(nb, spec.dim, box)) continue;
                        const bool fresh = !have.count(site_key(nb));
                        if (site_animals) {
                            if (!fresh) continue;
                            auto sites = p.sites;
                            sites.push_back(nb);
                            std::sort(sites.begin(), sites.end());
                            Polymer q{PolymerKind::animal, spec.dim, sites, induced_edges(sites)};
                            if (seen.insert(polymer_canonical_key(q)).second) next.push_back(q);
                        } else {
                            if (trees && !fresh) continue;  // tree growth adds leaves only
                            Edge e = make_edge(s, nb);
                            if (!fresh && std::binary_search(p.edges.begin(), p.edges.end(), e))
                                continue;
                            auto sites = p.sites;
                            if (fresh) sites.push_back(nb);
                            auto edges = p.edges;
                            edges.push_back(e);
                            if (static_cast<int>(sites.size()) > n) continue;
                            Polymer q = sorted_polymer(p.kind, spec.dim, std::move(sites), std::move(edges));
                            if (seen.insert(polymer_canonical_key(q)).second) next.push_back(q);
                        }
                    }
        }
        for (const Polymer& p : next) note_complete(p);
        level = std::move(next);
        if (site_animals && static_cast<int>(level.empty() ? 0 : level.front().sites.size()) == n)
            break;
    }

    std::vector<Polymer> out;
    for (const Polymer& p : complete)
        if (polymer_passes(spec, p)) out.push_back(p);
    std::sort(out.begin(), out.end(), [](const Polymer& a, const Polymer& b) {
        return polymer_canonical_key(a) < polymer_canonical_key(b);
    });
    return out;
}

BigInt naive_count(const EnsembleSpec& spec) {
    if (spec.model == Model::walk) return BigInt(naive_enumerate_walks(spec).size());
    return BigInt(naive_enumerate_polymers(spec).size());
}

}  // namespace latpoly
