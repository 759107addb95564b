#pragma once

#include <vector>

#include "latpoly/bigint.hpp"
#include "latpoly/enumerate.hpp"
#include "latpoly/lattice.hpp"

namespace latpoly {

// Deliberately naive serial reference enumerators, kept as the correctness
// anchor for the optimized engines. Walks: generate every raw step sequence
// in a bounding box and filter. Trees/animals: grow objects one element at
// a time in every possible order, deduplicate canonically at each level,
// and filter the constraint at the end. Usable only at small N.
std::vector<Walk> naive_enumerate_walks(const EnsembleSpec& spec);
std::vector<Polymer> naive_enumerate_polymers(const EnsembleSpec& spec);
BigInt naive_count(const EnsembleSpec& spec);

}  // namespace latpoly
