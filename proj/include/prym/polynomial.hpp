#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "prym/rational.hpp"

namespace prym {

/// Product of variables with positive exponents; variables are edge ids.
class Monomial {
 public:
  using Factor = std::pair<std::string, std::uint32_t>;

  Monomial() = default;
  static Monomial variable(std::string name, std::uint32_t exponent = 1);
  /// Factors may be unsorted and repeated; zero exponents are dropped.
  static Monomial from_factors(std::vector<Factor> factors);

  const std::vector<Factor>& factors() const { return factors_; }
  std::uint32_t degree() const { return degree_; }
  std::uint32_t exponent(std::string_view name) const;
  bool is_one() const { return factors_.empty(); }

  Monomial operator*(const Monomial& other) const;
  /// this / other when every exponent of `other` is <= the one here.
  std::optional<Monomial> divided_by(const Monomial& other) const;

  /// Graded lexicographic order: higher total degree is greater; ties are
  /// broken at the first variable (in name order) whose exponent differs.
  friend std::strong_ordering operator<=>(const Monomial& a, const Monomial& b);
  friend bool operator==(const Monomial& a, const Monomial& b) = default;

 private:
  std::vector<Factor> factors_;  // sorted by name, exponents > 0
  std::uint32_t degree_ = 0;
};

/// Sparse multivariate polynomial with exact rational coefficients.
/// Terms are kept in descending graded-lex order; no zero coefficients.
class MultiPoly {
 public:
  struct Descending {
    bool operator()(const Monomial& a, const Monomial& b) const { return b < a; }
  };
  using Terms = std::map<Monomial, Rational, Descending>;

  MultiPoly() = default;
  MultiPoly(const Rational& constant);  // NOLINT(google-explicit-constructor)
  MultiPoly(int constant) : MultiPoly(Rational(constant)) {}  // NOLINT(google-explicit-constructor)
  static MultiPoly variable(std::string name);
  static MultiPoly term(const Rational& coefficient, Monomial monomial);

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  /// Highest total degree; 0 for constants and for the zero polynomial.
  std::uint32_t degree() const;
  bool is_homogeneous() const;
  /// Coefficient of a monomial (zero when absent).
  Rational coefficient(const Monomial& m) const;
  /// Sorted, de-duplicated variable names that occur.
  std::vector<std::string> variables() const;

  MultiPoly& operator+=(const MultiPoly& other);
  MultiPoly& operator-=(const MultiPoly& other);
  MultiPoly& operator*=(const MultiPoly& other);
  MultiPoly& operator*=(const Rational& factor);
  /// Adds coefficient * monomial in place.
  void add_term(const Rational& coefficient, const Monomial& monomial);

  friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
  friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
  friend MultiPoly operator*(MultiPoly a, const Rational& c) { return a *= c; }
  friend MultiPoly operator*(const Rational& c, MultiPoly a) { return a *= c; }
  MultiPoly operator-() const;

  friend bool operator==(const MultiPoly& a, const MultiPoly& b) { return a.terms_ == b.terms_; }

  /// Evaluates at a full assignment. Throws ValidationError if a variable
  /// of the polynomial has no value.
  Rational eval(const std::map<std::string, Rational>& assignment) const;
  /// Substitutes values for a subset of variables.
  MultiPoly substitute(const std::map<std::string, Rational>& assignment) const;

  /// Canonical rendering, e.g. "8*e1*e3*e4 + 2*e1*e3*e5 - 1/2*e2^2 + 1".
  std::string to_string() const;
  /// Inverse of to_string. Throws ParseError.
  static MultiPoly parse(std::string_view text);

 private:
  Terms terms_;
};

/// Returns r with p == q * r. Throws ConsistencyError("not divisible") if the
/// multivariate division leaves a nonzero remainder, and InapplicableError
/// if q is zero.
MultiPoly exact_div(const MultiPoly& p, const MultiPoly& q);

}  // namespace prym
