#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace latpoly {

inline constexpr int kMaxDim = 4;

// A site of the hypercubic lattice. Unused trailing coordinates stay zero,
// so equality, ordering and hashing do not need to know the dimension.
// The default ordering is lexicographic with x1 compared first.
struct Site {
    std::array<std::int32_t, kMaxDim> c{};
    friend auto operator<=>(const Site&, const Site&) = default;
};

inline constexpr Site kOrigin{};

inline Site site2(int x, int y) { return Site{{x, y, 0, 0}}; }
inline Site site3(int x, int y, int z) { return Site{{x, y, z, 0}}; }

inline Site add(const Site& a, const Site& b) {
    Site r;
    for (int i = 0; i < kMaxDim; ++i) r.c[i] = a.c[i] + b.c[i];
    return r;
}
inline Site sub(const Site& a, const Site& b) {
    Site r;
    for (int i = 0; i < kMaxDim; ++i) r.c[i] = a.c[i] - b.c[i];
    return r;
}
inline Site neg(const Site& a) { return sub(Site{}, a); }

// Unit vector in the +x_{axis+1} direction (axis is 0-based).
inline Site unit(int axis) {
    Site r;
    r.c[axis] = 1;
    return r;
}

// Packs the coordinates into a single 64-bit key (16 bits each, biased).
// Collision-free for |coordinate| < 32768, far beyond any in-scope object.
inline std::uint64_t site_key(const Site& s) {
    std::uint64_t k = 0;
    for (int i = 0; i < kMaxDim; ++i)
        k = (k << 16) | static_cast<std::uint16_t>(s.c[i] + 0x8000);
    return k;
}

bool sites_adjacent(const Site& a, const Site& b);

// Undirected nearest-neighbour edge; endpoints stored in sorted order.
struct Edge {
    Site a, b;
    friend auto operator<=>(const Edge&, const Edge&) = default;
};

// Normalizes endpoint order; throws std::invalid_argument unless the
// endpoints are at Euclidean distance 1.
Edge make_edge(const Site& u, const Site& v);

enum class PolymerKind { tree, animal };

// A finite connected subgraph of the lattice: site set plus edge set.
// Sites and edges are kept sorted, so two polymers are equal iff the
// structs compare equal.
struct Polymer {
    PolymerKind kind = PolymerKind::tree;
    int dim = 2;
    std::vector<Site> sites;
    std::vector<Edge> edges;
    friend bool operator==(const Polymer&, const Polymer&) = default;
};

// A self-avoiding walk: ordered distinct sites, consecutive ones adjacent.
// All in-scope ensembles start at the origin.
struct Walk {
    int dim = 2;
    std::vector<Site> points;
    friend bool operator==(const Walk&, const Walk&) = default;
};

bool polymer_valid(const Polymer& p, std::string* why = nullptr);
bool walk_valid(const Walk& w, std::string* why = nullptr);

// Sorts sites/edges and validates; throws std::invalid_argument on failure.
Polymer make_polymer(PolymerKind kind, int dim, std::vector<Site> sites,
                     std::vector<Edge> edges);
Walk make_walk(int dim, std::vector<Site> points);

// All nearest-neighbour edges between members of `sites` (need not be sorted).
std::vector<Edge> induced_edges(std::span<const Site> sites);

// --- surface and span measurements ---------------------------------------

// Sites with x1 = 0, sorted. The size of this set is the contact number.
std::vector<Site> surface_sites(std::span<const Site> sites);
inline std::vector<Site> surface_sites(const Polymer& p) { return surface_sites(p.sites); }
inline std::vector<Site> surface_sites(const Walk& w) { return surface_sites(w.points); }

// Walk edges with both endpoints at x1 = 0.
std::vector<Edge> surface_edges(const Walk& w);

// Lengths of the maximal runs of consecutive walk points lying in the
// surface. The number of surface edges equals (sum of run lengths) - (#runs).
std::vector<int> surface_run_lengths(const Walk& w);

// 1 + max |u1 - v1|; for connected objects this equals the number of
// distinct occupied x1 levels.
int span_of(std::span<const Site> sites);
inline int span_of(const Polymer& p) { return span_of(p.sites); }
inline int span_of(const Walk& w) { return span_of(w.points); }

Polymer translate(const Polymer& p, const Site& by);
Walk translate(const Walk& w, const Site& by);

// Throws std::invalid_argument on an empty set.
Site lex_smallest_site(std::span<const Site> sites);

bool in_half_space(std::span<const Site> sites);
inline bool in_half_space(const Polymer& p) { return in_half_space(p.sites); }
inline bool in_half_space(const Walk& w) { return in_half_space(w.points); }

bool contains_origin(std::span<const Site> sites);
inline bool contains_origin(const Polymer& p) { return contains_origin(p.sites); }

// Bridge: x_d strictly above the start for every later point, maximal at the end.
bool is_bridge(const Walk& w);

// Member of the star class: contains the origin and the origin is the
// lexicographically smallest site of the surface set.
bool in_lex_star(const Polymer& p);

std::string site_str(const Site& s, int dim);
std::string polymer_str(const Polymer& p);
std::string walk_str(const Walk& w);

// Compact canonical byte serialization, usable as a hash/dedup key.
std::string polymer_canonical_key(const Polymer& p);
std::string walk_canonical_key(const Walk& w);

}  // namespace latpoly
