#pragma once

#include <cstddef>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "prym/cover.hpp"
#include "prym/graph.hpp"
#include "prym/polynomial.hpp"
#include "prym/rational.hpp"

namespace prym {

/// Integer 1-chain over the fixed orientation of a graph, stored sparsely
/// by edge index. Zero coefficients are never stored.
class Chain {
 public:
  Chain() = default;
  static Chain edge(std::size_t e, const Integer& coefficient = 1);

  const std::map<std::size_t, Integer>& coefficients() const { return coefficients_; }
  Integer operator[](std::size_t e) const;
  bool is_zero() const { return coefficients_.empty(); }

  void add(std::size_t e, const Integer& coefficient);
  Chain& operator+=(const Chain& other);
  Chain& operator-=(const Chain& other);
  Chain& operator*=(const Integer& factor);
  friend Chain operator+(Chain a, const Chain& b) { return a += b; }
  friend Chain operator-(Chain a, const Chain& b) { return a -= b; }
  friend Chain operator*(const Integer& k, Chain a) { return a *= k; }
  friend bool operator==(const Chain&, const Chain&) = default;

  /// Human readable, e.g. "e1+ - e1-".
  std::string to_string(const MetricGraph& g) const;

 private:
  std::map<std::size_t, Integer> coefficients_;
};

/// d(sum n_e e) = sum n_e (t(e) - s(e)), indexed by vertex.
std::vector<Integer> boundary(const MetricGraph& g, const Chain& c);
bool is_cycle(const MetricGraph& g, const Chain& c);

struct CycleBasis {
  std::vector<Chain> cycles;

  std::size_t size() const { return cycles.size(); }
};

/// Fundamental cycles of the canonical spanning tree, one per non-tree edge
/// in edge order; each has coefficient +1 on its own non-tree edge. Throws
/// ValidationError for disconnected graphs.
CycleBasis cycle_basis(const MetricGraph& g);

Chain pushforward(const DoubleCover& c, const Chain& total_chain);
/// Undilated e -> e+ + e-, dilated e -> 2 e~ (with orientation signs).
Chain pullback(const DoubleCover& c, const Chain& base_chain);
Chain involution_push(const DoubleCover& c, const Chain& total_chain);

/// Symbol attached to each edge for symbolic pairings: the length of edge i
/// is `scale * variable`.
struct LengthSymbol {
  std::string variable;
  Rational scale;
};
using LengthSymbols = std::vector<LengthSymbol>;

/// x_e for every edge of g.
LengthSymbols edge_symbols(const MetricGraph& g);
/// Total-graph edge lengths in base variables: x_{pi(e)} on undilated
/// lifts, x_{pi(e)}/2 on dilated ones.
LengthSymbols total_symbols(const DoubleCover& c);

Rational edge_length_pairing(const MetricGraph& g, const Chain& a, const Chain& b);
MultiPoly edge_length_pairing(const LengthSymbols& symbols, const Chain& a, const Chain& b);

/// Determinant of the pairing matrix of `basis`. The empty basis gives 1.
Rational gram_det(const MetricGraph& g, const std::vector<Chain>& basis);
MultiPoly gram_det(const LengthSymbols& symbols, const std::vector<Chain>& basis);

/// Fraction-free (Bareiss) determinant of a square polynomial matrix.
MultiPoly determinant(std::vector<std::vector<MultiPoly>> m);

/// Dense integer matrix with arbitrary-precision entries.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  static IntMatrix identity(std::size_t n);
  static IntMatrix from_rows(const std::vector<std::vector<long>>& rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Integer& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Integer& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  IntMatrix transpose() const;
  std::vector<Integer> column(std::size_t c) const;
  bool is_zero() const;

  friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
  friend IntMatrix operator+(const IntMatrix& a, const IntMatrix& b);
  friend IntMatrix operator-(const IntMatrix& a, const IntMatrix& b);
  friend IntMatrix operator*(const Integer& k, const IntMatrix& a);
  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

  /// Row-major JSON-style rendering, e.g. "[[1,0],[0,1]]".
  std::string to_string() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Integer> data_;
};

/// Matrix M with map(domain_i) = sum_j M(j, i) codomain_j. Coordinates are
/// solved exactly over Q; throws ConsistencyError when an image is outside
/// the span of the codomain basis or has non-integral coordinates.
IntMatrix matrix_of(const std::function<Chain(const Chain&)>& map, const CycleBasis& domain,
                    const CycleBasis& codomain);

/// Pushforward, pullback and involution on H1 in fundamental cycle bases.
struct HomologyMaps {
  CycleBasis base_basis;
  CycleBasis total_basis;
  IntMatrix push;  ///< g x g~
  IntMatrix pull;  ///< g~ x g
  IntMatrix inv;   ///< g~ x g~
};

HomologyMaps homology_maps(const DoubleCover& c);

/// Rank over Q.
std::size_t rank(const IntMatrix& m);

/// Row-style Hermite normal form: nonzero rows only, positive pivots,
/// entries above each pivot reduced into [0, pivot).
IntMatrix hermite_normal_form(const IntMatrix& m);

/// Columns form a Z-basis of {x : m x = 0}, in canonical (Hermite) form.
IntMatrix kernel_basis(const IntMatrix& m);

struct SnfResult {
  IntMatrix D;
  IntMatrix U;
  IntMatrix V;

  /// Nonzero diagonal entries d1 | d2 | ...
  std::vector<Integer> invariant_factors() const;
};

/// U * m * V == D, D diagonal with nonnegative entries and divisibility
/// chain, U and V unimodular. Pivot: smallest nonzero absolute value, then
/// first in row-major order.
SnfResult snf(const IntMatrix& m);

/// Induced polarization of the Prym lattice: the map from Ker(pi_*) to the
/// torsion-free cokernel of pi^*, in Z-bases of both. Its Smith form is the
/// polarization type.
IntMatrix induced_polarization(const HomologyMaps& maps);

/// Combines basis coordinates (columns of `coords`) into chains.
std::vector<Chain> chains_from_coordinates(const CycleBasis& basis, const IntMatrix& coords);

}  // namespace prym
