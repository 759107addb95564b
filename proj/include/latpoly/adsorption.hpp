#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "latpoly/bigint.hpp"
#include "latpoly/enumerate.hpp"

namespace latpoly {

enum class Surface { impenetrable, penetrable };
enum class Weighting { site_contacts, edge_contacts };

const char* surface_name(Surface s);
const char* weighting_name(Weighting w);
Surface surface_from_name(const std::string& s);
Weighting weighting_from_name(const std::string& s);

// One partition-function evaluation request. The impenetrable surface uses
// the half-space ensemble, the penetrable one the contains-origin ensemble.
// Edge-contact weighting is the walk model that rewards surface edges; it
// is only defined for impenetrable walks.
struct PartitionQuery {
    Model model = Model::tree;
    Surface surface = Surface::impenetrable;
    Weighting weighting = Weighting::site_contacts;
    int dim = 2;
    int n = 1;
    double beta = 0.0;
    AnimalConvention convention = AnimalConvention::site;
};

// Exact object behind Z_N(beta): integer coefficients of the polynomial in
// e^beta, coeff[k] = number of members with k (site or edge) contacts.
struct PartitionPolynomial {
    int n = 0;
    Weighting weighting = Weighting::site_contacts;
    std::vector<BigInt> coeff;
};

Constraint ensemble_constraint(Surface s);

PartitionPolynomial partition_polynomial(const PartitionQuery& q, int threads = 0);

// Stable evaluation of log sum_k coeff[k] e^{beta k} (max-term factoring).
double log_partition_value(const PartitionPolynomial& poly, double beta);
double partition_value(const PartitionPolynomial& poly, double beta);

// (1/N) log Z_N(beta).
double finite_free_energy(const PartitionQuery& q, int threads = 0);
double finite_free_energy(const PartitionPolynomial& poly, double beta);

// Mean contact number d/dbeta log Z at the given beta, from the polynomial.
double mean_contacts(const PartitionPolynomial& poly, double beta);

struct GrowthEstimate {
    Model model = Model::tree;
    int dim = 2;
    std::vector<double> point_estimates;  // count_N^{1/N} for N = 1..maxN
    std::vector<BigInt> counts;
    double bound = 0.0;        // best rigorous one-sided bound from the data
    bool bound_is_lower = true;  // trees/animals: lower; walks: upper
};

// Super/submultiplicativity turns every finite count into a one-sided
// rigorous bound on the growth constant; the point sequence is reported
// alongside, labeled as estimates.
GrowthEstimate growth_bracket(Model model, int dim, int max_n,
                              AnimalConvention convention = AnimalConvention::site,
                              int threads = 0);

// Finite-size desorption bound pipeline for trees: exact marked-count
// identities and inequalities, plus the truncated-series comparison with a
// certified (estimate-labeled) geometric tail. JSON report with a rigor
// label on every step.
nlohmann::json tree_bound_report(int dim, int max_n, const std::vector<double>& beta_grid,
                                 int j_max = 3, std::optional<double> lambda_hat = std::nullopt,
                                 int threads = 0);

// Walk analogue: compares site weighting against doubled edge weighting per
// (N, beta), checks the exact marked-walk inequalities, and assembles the
// geometric bound under an explicit epsilon rule.
nlohmann::json walk_bound_report(int dim, int max_n, const std::vector<double>& beta_grid,
                                 int j_max = 3, int threads = 0);

}  // namespace latpoly
