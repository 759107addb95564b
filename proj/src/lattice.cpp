#include "latpoly/lattice.hpp"

#include <algorithm>
#include <cstdlib>
#include <queue>
#include <sstream>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

namespace latpoly {

bool sites_adjacent(const Site& a, const Site& b) {
    int dist = 0;
    for (int i = 0; i < kMaxDim; ++i) {
        dist += std::abs(a.c[i] - b.c[i]);
        if (dist > 1) return false;
    }
    return dist == 1;
}

Edge make_edge(const Site& u, const Site& v) {
    if (!sites_adjacent(u, v))
        throw std::invalid_argument("make_edge: endpoints not at distance 1");
    return u <= v ? Edge{u, v} : Edge{v, u};
}

namespace {

bool connected_via_edges(const std::vector<Site>& sites, const std::vector<Edge>& edges) {
    if (sites.empty()) return false;
    if (sites.size() == 1) return edges.empty() || true;
    std::unordered_map<std::uint64_t, int> index;
    index.reserve(sites.size() * 2);
    for (std::size_t i = 0; i < sites.size(); ++i) index[site_key(sites[i])] = static_cast<int>(i);
    std::vector<std::vector<int>> adj(sites.size());
    for (const Edge& e : edges) {
        auto ia = index.find(site_key(e.a));
        auto ib = index.find(site_key(e.b));
        if (ia == index.end() || ib == index.end()) return false;
        adj[ia->second].push_back(ib->second);
        adj[ib->second].push_back(ia->second);
    }
    std::vector<char> seen(sites.size(), 0);
    std::queue<int> q;
    q.push(0);
    seen[0] = 1;
    std::size_t reached = 1;
    while (!q.empty()) {
        int v = q.front();
        q.pop();
        for (int w : adj[v])
            if (!seen[w]) {
                seen[w] = 1;
                ++reached;
                q.push(w);
            }
    }
    return reached == sites.size();
}

bool fail(std::string* why, const char* msg) {
    if (why) *why = msg;
    return false;
}

}  // namespace

bool polymer_valid(const Polymer& p, std::string* why) {
    if (p.dim < 2 || p.dim > kMaxDim) return fail(why, "dimension out of range");
    if (p.sites.empty()) return fail(why, "no sites");
    for (const Site& s : p.sites)
        for (int i = p.dim; i < kMaxDim; ++i)
            if (s.c[i] != 0) return fail(why, "coordinate beyond dimension nonzero");
    if (!std::is_sorted(p.sites.begin(), p.sites.end())) return fail(why, "sites not sorted");
    if (std::adjacent_find(p.sites.begin(), p.sites.end()) != p.sites.end())
        return fail(why, "duplicate site");
    if (!std::is_sorted(p.edges.begin(), p.edges.end())) return fail(why, "edges not sorted");
    if (std::adjacent_find(p.edges.begin(), p.edges.end()) != p.edges.end())
        return fail(why, "duplicate edge");
    for (const Edge& e : p.edges) {
        if (!sites_adjacent(e.a, e.b)) return fail(why, "edge endpoints not adjacent");
        if (!std::binary_search(p.sites.begin(), p.sites.end(), e.a) ||
            !std::binary_search(p.sites.begin(), p.sites.end(), e.b))
            return fail(why, "edge endpoint not a member site");
    }
    if (!connected_via_edges(p.sites, p.edges)) return fail(why, "not connected");
    if (p.kind == PolymerKind::tree && p.edges.size() != p.sites.size() - 1)
        return fail(why, "tree edge count != sites-1");
    return true;
}

bool walk_valid(const Walk& w, std::string* why) {
    if (w.dim < 2 || w.dim > kMaxDim) return fail(why, "dimension out of range");
    if (w.points.empty()) return fail(why, "no points");
    if (w.points.front() != kOrigin) return fail(why, "walk does not start at the origin");
    for (const Site& s : w.points)
        for (int i = w.dim; i < kMaxDim; ++i)
            if (s.c[i] != 0) return fail(why, "coordinate beyond dimension nonzero");
    std::unordered_set<std::uint64_t> seen;
    seen.reserve(w.points.size() * 2);
    for (std::size_t i = 0; i < w.points.size(); ++i) {
        if (!seen.insert(site_key(w.points[i])).second) return fail(why, "repeated point");
        if (i > 0 && !sites_adjacent(w.points[i - 1], w.points[i]))
            return fail(why, "consecutive points not adjacent");
    }
    return true;
}

Polymer make_polymer(PolymerKind kind, int dim, std::vector<Site> sites,
                     std::vector<Edge> edges) {
    std::sort(sites.begin(), sites.end());
    std::sort(edges.begin(), edges.end());
    Polymer p{kind, dim, std::move(sites), std::move(edges)};
    std::string why;
    if (!polymer_valid(p, &why)) throw std::invalid_argument("make_polymer: " + why);
    return p;
}

Walk make_walk(int dim, std::vector<Site> points) {
    Walk w{dim, std::move(points)};
    std::string why;
    if (!walk_valid(w, &why)) throw std::invalid_argument("make_walk: " + why);
    return w;
}

std::vector<Edge> induced_edges(std::span<const Site> sites) {
    std::unordered_set<std::uint64_t> have;
    have.reserve(sites.size() * 2);
    for (const Site& s : sites) have.insert(site_key(s));
    std::vector<Edge> out;
    for (const Site& s : sites)
        for (int axis = 0; axis < kMaxDim; ++axis) {
            Site nb = s;
            nb.c[axis] += 1;
            if (have.count(site_key(nb))) out.push_back(Edge{s, nb});
        }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Site> surface_sites(std::span<const Site> sites) {
    std::vector<Site> out;
    for (const Site& s : sites)
        if (s.c[0] == 0) out.push_back(s);
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Edge> surface_edges(const Walk& w) {
    std::vector<Edge> out;
    for (std::size_t i = 1; i < w.points.size(); ++i)
        if (w.points[i - 1].c[0] == 0 && w.points[i].c[0] == 0)
            out.push_back(make_edge(w.points[i - 1], w.points[i]));
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<int> surface_run_lengths(const Walk& w) {
    std::vector<int> runs;
    int cur = 0;
    for (const Site& s : w.points) {
        if (s.c[0] == 0) {
            ++cur;
        } else if (cur > 0) {
            runs.push_back(cur);
            cur = 0;
        }
    }
    if (cur > 0) runs.push_back(cur);
    return runs;
}

int span_of(std::span<const Site> sites) {
    if (sites.empty()) throw std::invalid_argument("span_of: empty configuration");
    std::int32_t lo = sites[0].c[0], hi = sites[0].c[0];
    for (const Site& s : sites) {
        lo = std::min(lo, s.c[0]);
        hi = std::max(hi, s.c[0]);
    }
    return 1 + static_cast<int>(hi - lo);
}

Polymer translate(const Polymer& p, const Site& by) {
    Polymer q = p;
    for (Site& s : q.sites) s = add(s, by);
    for (Edge& e : q.edges) {
        e.a = add(e.a, by);
        e.b = add(e.b, by);
    }
    return q;
}

Walk translate(const Walk& w, const Site& by) {
    Walk q = w;
    for (Site& s : q.points) s = add(s, by);
    return q;
}

Site lex_smallest_site(std::span<const Site> sites) {
    if (sites.empty()) throw std::invalid_argument("lex_smallest_site: empty set");
    return *std::min_element(sites.begin(), sites.end());
}

bool in_half_space(std::span<const Site> sites) {
    for (const Site& s : sites)
        if (s.c[0] < 0) return false;
    return true;
}

bool contains_origin(std::span<const Site> sites) {
    for (const Site& s : sites)
        if (s == kOrigin) return true;
    return false;
}

bool is_bridge(const Walk& w) {
    const int axis = w.dim - 1;
    const std::int32_t start = w.points.front().c[axis];
    const std::int32_t last = w.points.back().c[axis];
    for (std::size_t i = 1; i < w.points.size(); ++i) {
        std::int32_t v = w.points[i].c[axis];
        if (!(v > start && v <= last)) return false;
    }
    return true;
}

bool in_lex_star(const Polymer& p) {
    if (!contains_origin(p)) return false;
    auto surf = surface_sites(p);
    return !surf.empty() && surf.front() == kOrigin;
}

std::string site_str(const Site& s, int dim) {
    std::ostringstream os;
    os << '(';
    for (int i = 0; i < dim; ++i) {
        if (i) os << ',';
        os << s.c[i];
    }
    os << ')';
    return os.str();
}

std::string polymer_str(const Polymer& p) {
    std::ostringstream os;
    os << (p.kind == PolymerKind::tree ? "tree" : "animal") << " sites:";
    for (const Site& s : p.sites) os << site_str(s, p.dim);
    os << " edges:";
    for (const Edge& e : p.edges) os << site_str(e.a, p.dim) << '-' << site_str(e.b, p.dim);
    return os.str();
}

std::string walk_str(const Walk& w) {
    std::ostringstream os;
    for (std::size_t i = 0; i < w.points.size(); ++i) {
        if (i) os << "->";
        os << site_str(w.points[i], w.dim);
    }
    return os.str();
}

namespace {
void append_site(std::string& out, const Site& s) {
    for (int i = 0; i < kMaxDim; ++i) {
        out.push_back(static_cast<char>((s.c[i] >> 8) & 0xff));
        out.push_back(static_cast<char>(s.c[i] & 0xff));
    }
}
}  // namespace

std::string polymer_canonical_key(const Polymer& p) {
    std::string out;
    out.reserve(p.sites.size() * 8 + p.edges.size() * 16 + 2);
    out.push_back(p.kind == PolymerKind::tree ? 'T' : 'A');
    for (const Site& s : p.sites) append_site(out, s);
    out.push_back('|');
    for (const Edge& e : p.edges) {
        append_site(out, e.a);
        append_site(out, e.b);
    }
    return out;
}

std::string walk_canonical_key(const Walk& w) {
    std::string out;
    out.reserve(w.points.size() * 8 + 1);
    out.push_back('W');
    for (const Site& s : w.points) append_site(out, s);
    return out;
}

}  // namespace latpoly
