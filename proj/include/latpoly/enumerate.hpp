#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "latpoly/bigint.hpp"
#include "latpoly/lattice.hpp"

namespace latpoly {

enum class Model { tree, animal, walk };
enum class Constraint { translation_classes, contains_origin, half_space, lex_star, bridge };
enum class AnimalConvention { site, subgraph };

const char* model_name(Model m);
const char* constraint_name(Constraint c);
const char* convention_name(AnimalConvention c);
Model model_from_name(const std::string& s);
Constraint constraint_from_name(const std::string& s);
AnimalConvention convention_from_name(const std::string& s);

// One exactly-counted ensemble. N counts sites for trees/animals and steps
// for walks. The animal convention only matters for model == animal:
// `site` treats an animal as a site set carrying all induced edges,
// `subgraph` counts every connected spanning edge subset separately.
struct EnsembleSpec {
    Model model = Model::tree;
    int dim = 2;
    int n = 1;
    Constraint constraint = Constraint::contains_origin;
    AnimalConvention convention = AnimalConvention::site;
};

// Throws std::invalid_argument on inconsistent combinations
// (bridge is walk-only, lex-star is tree/animal-only, ...).
void validate_spec(const EnsembleSpec& spec);

struct EnumLimits {
    std::uint64_t max_nodes = 0;  // 0 = unlimited search-tree nodes
};

// Raised when the node budget is exhausted. Results are never silently
// truncated: the exception reports how far the search got.
struct ResourceLimitError : std::runtime_error {
    std::uint64_t nodes_visited;
    explicit ResourceLimitError(std::uint64_t nodes)
        : std::runtime_error("enumeration aborted: node budget exhausted after " +
                             std::to_string(nodes) + " nodes (partial work discarded)"),
          nodes_visited(nodes) {}
};

// Everything one pass over an ensemble produces. Histograms are exact
// integers indexed directly (index k = number of members with that value).
struct EnsembleSummary {
    BigInt count = 0;
    std::vector<BigInt> site_contacts;  // index |H|
    std::vector<BigInt> edge_contacts;  // walks only, index |surface edges|
    std::vector<BigInt> span_hist;      // index span
};

struct SurfaceProfile {
    int n = 0;
    std::vector<BigInt> counts;  // counts[k] = members with k contacts
    BigInt total() const;
};

struct SpanStats {
    int n = 0;
    std::vector<BigInt> histogram;  // histogram[s] = members with span s
    std::int64_t threshold = 0;     // floor(n / ln^2 n); n for n == 1
    BigRat below_threshold_fraction = 0;
    BigInt total() const;
};

// Span threshold convention used throughout: natural logarithm, floor.
// ln^2(1) = 0, so every span qualifies at n = 1; we report threshold = n.
std::int64_t span_threshold(int n);

// threads <= 0 picks the environment default (LATPOLY_THREADS, then OpenMP).
int resolve_threads(int threads);

EnsembleSummary summarize(const EnsembleSpec& spec, int threads = 0,
                          const EnumLimits& limits = {});

BigInt ensemble_count(const EnsembleSpec& spec, int threads = 0,
                      const EnumLimits& limits = {});

// Requires constraint in {half_space, contains_origin}.
SurfaceProfile surface_profile(const EnsembleSpec& spec, int threads = 0,
                               const EnumLimits& limits = {});

// Walk-only: histogram of the number of surface edges.
SurfaceProfile edge_contact_profile(const EnsembleSpec& spec, int threads = 0,
                                    const EnumLimits& limits = {});

SpanStats span_stats(const EnsembleSpec& spec, int threads = 0,
                     const EnumLimits& limits = {});

// Streams every member exactly once, in a canonical order that does not
// depend on the thread count.
void enumerate_polymers(const EnsembleSpec& spec,
                        const std::function<void(const Polymer&)>& fn,
                        int threads = 0, const EnumLimits& limits = {});
void enumerate_walks(const EnsembleSpec& spec,
                     const std::function<void(const Walk&)>& fn,
                     int threads = 0, const EnumLimits& limits = {});

// |{half-space N-site configurations with exactly one surface contact}|.
// Contract: equals the (N-1)-site half-space count.
BigInt count_single_contact(int n, int dim, Model model = Model::tree,
                            AnimalConvention convention = AnimalConvention::site,
                            int threads = 0);

struct MultiplicativityRow {
    int n = 0, m = 0;
    BigInt lhs, rhs;  // lhs <= rhs is the asserted direction
    bool holds = false;
};
struct MultiplicativityReport {
    Model model;
    int dim;
    int limit;
    bool all_hold = true;
    std::vector<MultiplicativityRow> rows;
};

// Trees/animals: t_N * t_M <= t_{N+M} over translation classes.
// Walks: c_{N+M} <= c_N * c_M.
MultiplicativityReport supermultiplicativity_check(Model model, int dim, int limit,
                                                   AnimalConvention convention = AnimalConvention::site,
                                                   int threads = 0);

// --- spanning-structure helpers (exposed for cross-checks) ----------------

// Number of spanning trees of the induced subgraph, by fraction-free
// integer elimination of the reduced Laplacian.
BigInt spanning_tree_count(std::span<const Site> sites);

// Enumerates spanning trees / connected spanning edge subsets of the
// induced subgraph, in lexicographic edge order.
void for_each_spanning_tree(std::span<const Site> sites,
                            const std::function<void(const std::vector<Edge>&)>& fn);
void for_each_connected_spanning_subgraph(std::span<const Site> sites,
                                          const std::function<void(const std::vector<Edge>&)>& fn);
BigInt connected_spanning_subgraph_count(std::span<const Site> sites);

}  // namespace latpoly
