#pragma once

#include <map>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include <json.hpp>

#include "latpoly/bigint.hpp"
#include "latpoly/enumerate.hpp"
#include "latpoly/lattice.hpp"

namespace latpoly {

// Half-space configuration with nonnegative integer marks on its surface
// sites. Marks are stored sparsely: absent key = 0 marks, and zero-valued
// entries are never stored, so equal marked objects compare equal.
struct MarkedPolymer {
    Polymer base;
    std::map<Site, int> marks;
    int total_marks() const;
    friend bool operator==(const MarkedPolymer&, const MarkedPolymer&) = default;
};

// Half-space walk with nonnegative integer marks on its surface edges.
struct MarkedWalk {
    Walk base;
    std::map<Edge, int> marks;
    int total_marks() const;
    friend bool operator==(const MarkedWalk&, const MarkedWalk&) = default;
};

// sum_k C(k+j-1, j) * profile.counts[k]: the number of ways to put j marks
// on the surface sites across the whole ensemble.
BigInt stars_and_bars_count(int n, int j, const SurfaceProfile& profile);

// Grows a straight hair of w(v) sites in the -x1 direction below every
// marked surface site. Maps an N-site marked tree with j total marks to an
// (N+j)-site unmarked tree; injective because the base is the half-space
// part and the marks are the hair lengths.
Polymer attach_marks_tree(const MarkedPolymer& m);

// Inverse on the image; nullopt when the tree is not of hair form.
std::optional<MarkedPolymer> detach_marks_tree(const Polymer& t);

// Surface-contact-preserving concatenation of two star-class polymers:
// translate psi just past tau along +x2 and join with one edge from the
// lexicographically smallest touching site. Contact sets stay disjoint.
Polymer tree_concat(const Polymer& tau, const Polymer& psi);

// Recovers the factors of a concatenation given the split sizes, or
// nullopt when no edge on the origin-to-top path splits correctly.
std::optional<std::pair<Polymer, Polymer>> tree_concat_inverse(const Polymer& theta, int n, int m);

// Pigeonholes a small-span translation class onto a star-class member:
// picks the smallest x1 level carrying at least ln^2(N) sites and shifts
// its lexicographically smallest site to the origin. Returns the shifted
// polymer and the level used. Throws when no level qualifies.
std::pair<Polymer, int> shift_to_star(const Polymer& tau);

// Pushes every marked surface edge straight down by its mark count and
// reconnects along +-x1, following the walk's own edge order. Adds at most
// 2j steps. Throws if the canonical connector self-intersects (the
// exhaustive verifier counts such events; none are known to occur).
Walk attach_marks_walk(const MarkedWalk& m);

// Endpoint splicing of two bridges; closed on bridges and injective for
// fixed factor lengths. Throws on non-bridge inputs.
Walk bridge_concat(const Walk& w, const Walk& psi);

// Membership in D_{n,j,m}: an n-step bridge of span at most n/ln^2(n) with
// at least ln^2(n) points at x1 = j and endpoint x1 = m.
bool in_bridge_class(const Walk& w, int n, int j, int m);

// xi: the canonical (J+1)-step bridge from the origin to (-J, 0, ..., 0, 1).
Walk bridge_prefix(int dim, int j);

// zeta = xi (+) omega[1] (+) psi[1] (+) ... (+) omega[k] (+) psi[k], a
// bridge of length J+1+2kn whose surface contact count is at least
// k * ln^2(n). Validates every factor's class membership.
Walk build_zeta(int dim, int n, int j, int m, std::span<const Walk> omegas,
                std::span<const Walk> psis);

// --- exhaustive small-size verifiers ---------------------------------------
// Each returns a JSON report: map name, domain/image sizes, injectivity
// verdict, witness on failure, and a "pass" flag.

nlohmann::json verify_tree_marks(int dim, int max_n, int max_j, int threads = 0);
nlohmann::json verify_walk_marks(int dim, int max_n, int max_j, int threads = 0);
nlohmann::json verify_tree_concat(int dim, std::span<const std::pair<int, int>> size_pairs,
                                  int threads = 0);
nlohmann::json verify_bridge_concat(int dim, int n, int m, int threads = 0);
nlohmann::json verify_zeta(int dim, int n, int max_k, int threads = 0);
nlohmann::json verify_single_contact(int dim, int max_n, Model model = Model::tree,
                                     AnimalConvention convention = AnimalConvention::site,
                                     int threads = 0);
nlohmann::json verify_supermult(Model model, int dim, int limit,
                                AnimalConvention convention = AnimalConvention::site,
                                int threads = 0);
nlohmann::json verify_shift_to_star(int dim, int max_n, int threads = 0);

// Enumerates the weak compositions of j over k slots (deterministic order).
void for_each_composition(int j, int k, const std::function<void(std::span<const int>)>& fn);

}  // namespace latpoly
