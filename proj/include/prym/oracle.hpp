#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "prym/cover.hpp"
#include "prym/graph.hpp"
#include "prym/volumes.hpp"

namespace prym::oracle {

/// Product of all edge lengths times the determinant of the reduced
/// Laplacian with conductances 1/length. Lengths are keyed by edge id.
/// Throws ValidationError if g is disconnected.
Rational matrix_tree_value(const MetricGraph& g, const std::map<std::string, Rational>& lengths);

/// Exhaustive scan over all h-subsets of undilated edges. Throws
/// InapplicableError above 20 undilated edges.
std::vector<Ogod> brute_ogods(const DoubleCover& c);

/// Random positive rational lengths on the base; compares both sides of
/// the Jacobian factorization and every volume route numerically, one check per trial and
/// identity. Deterministic for a given seed.
Report numeric_gram_check(const DoubleCover& c, int trials, std::uint64_t seed);

}  // namespace prym::oracle
