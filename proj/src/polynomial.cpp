#include "prym/polynomial.hpp"

#include <algorithm>
#include <cctype>

#include "prym/error.hpp"

namespace prym {

Monomial Monomial::variable(std::string name, std::uint32_t exponent) {
  Monomial m;
  if (exponent > 0) {
    m.factors_.emplace_back(std::move(name), exponent);
    m.degree_ = exponent;
  }
  return m;
}

Monomial Monomial::from_factors(std::vector<Factor> factors) {
  std::sort(factors.begin(), factors.end(), [](const Factor& a, const Factor& b) { return a.first < b.first; });
  Monomial m;
  for (auto& [name, exp] : factors) {
    if (exp == 0) continue;
    if (!m.factors_.empty() && m.factors_.back().first == name)
      m.factors_.back().second += exp;
    else
      m.factors_.emplace_back(std::move(name), exp);
    m.degree_ += exp;
  }
  return m;
}

std::uint32_t Monomial::exponent(std::string_view name) const {
  auto it = std::lower_bound(factors_.begin(), factors_.end(), name,
                             [](const Factor& f, std::string_view n) { return f.first < n; });
  return it != factors_.end() && it->first == name ? it->second : 0;
}

Monomial Monomial::operator*(const Monomial& other) const {
  Monomial out;
  out.factors_.reserve(factors_.size() + other.factors_.size());
  auto a = factors_.begin();
  auto b = other.factors_.begin();
  while (a != factors_.end() || b != other.factors_.end()) {
    if (b == other.factors_.end() || (a != factors_.end() && a->first < b->first)) {
      out.factors_.push_back(*a++);
    } else if (a == factors_.end() || b->first < a->first) {
      out.factors_.push_back(*b++);
    } else {
      out.factors_.emplace_back(a->first, a->second + b->second);
      ++a;
      ++b;
    }
  }
  out.degree_ = degree_ + other.degree_;
  return out;
}

std::optional<Monomial> Monomial::divided_by(const Monomial& other) const {
  if (other.degree_ > degree_) return std::nullopt;
  Monomial out;
  auto a = factors_.begin();
  for (const auto& [name, exp] : other.factors_) {
    while (a != factors_.end() && a->first < name) out.factors_.push_back(*a++);
    if (a == factors_.end() || a->first != name || a->second < exp) return std::nullopt;
    if (a->second > exp) out.factors_.emplace_back(name, a->second - exp);
    ++a;
  }
  while (a != factors_.end()) out.factors_.push_back(*a++);
  out.degree_ = degree_ - other.degree_;
  return out;
}

std::strong_ordering operator<=>(const Monomial& a, const Monomial& b) {
  if (auto c = a.degree_ <=> b.degree_; c != 0) return c;
  auto x = a.factors_.begin();
  auto y = b.factors_.begin();
  for (; x != a.factors_.end() && y != b.factors_.end(); ++x, ++y) {
    if (x->first != y->first) {
      // The monomial carrying the earlier variable is larger.
      return x->first < y->first ? std::strong_ordering::greater : std::strong_ordering::less;
    }
    if (auto c = x->second <=> y->second; c != 0) return c;
  }
  if (x != a.factors_.end()) return std::strong_ordering::greater;
  if (y != b.factors_.end()) return std::strong_ordering::less;
  return std::strong_ordering::equal;
}

MultiPoly::MultiPoly(const Rational& constant) {
  if (constant != 0) terms_.emplace(Monomial{}, constant);
}

MultiPoly MultiPoly::variable(std::string name) { return term(Rational(1), Monomial::variable(std::move(name))); }

MultiPoly MultiPoly::term(const Rational& coefficient, Monomial monomial) {
  MultiPoly p;
  if (coefficient != 0) p.terms_.emplace(std::move(monomial), coefficient);
  return p;
}

std::uint32_t MultiPoly::degree() const { return terms_.empty() ? 0 : terms_.begin()->first.degree(); }

bool MultiPoly::is_homogeneous() const {
  if (terms_.empty()) return true;
  const auto d = degree();
  return std::all_of(terms_.begin(), terms_.end(), [d](const auto& t) { return t.first.degree() == d; });
}

Rational MultiPoly::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Rational(0) : it->second;
}

std::vector<std::string> MultiPoly::variables() const {
  std::vector<std::string> out;
  for (const auto& [m, c] : terms_)
    for (const auto& [name, exp] : m.factors()) out.push_back(name);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

void MultiPoly::add_term(const Rational& coefficient, const Monomial& monomial) {
  if (coefficient == 0) return;
  auto [it, inserted] = terms_.try_emplace(monomial, coefficient);
  if (!inserted) {
    it->second += coefficient;
    if (it->second == 0) terms_.erase(it);
  }
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& other) {
  for (const auto& [m, c] : other.terms_) add_term(c, m);
  return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& other) {
  for (const auto& [m, c] : other.terms_) add_term(-c, m);
  return *this;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
  MultiPoly out;
  for (const auto& [ma, ca] : a.terms_)
    for (const auto& [mb, cb] : b.terms_) out.add_term(ca * cb, ma * mb);
  return out;
}

MultiPoly& MultiPoly::operator*=(const MultiPoly& other) { return *this = *this * other; }

MultiPoly& MultiPoly::operator*=(const Rational& factor) {
  if (factor == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, c] : terms_) c *= factor;
  return *this;
}

MultiPoly MultiPoly::operator-() const {
  MultiPoly out = *this;
  for (auto& [m, c] : out.terms_) c = -c;
  return out;
}

namespace {

Rational power(const Rational& base, std::uint32_t exp) {
  Rational out(1);
  for (std::uint32_t i = 0; i < exp; ++i) out *= base;
  return out;
}

}  // namespace

Rational MultiPoly::eval(const std::map<std::string, Rational>& assignment) const {
  Rational total(0);
  for (const auto& [m, c] : terms_) {
    Rational value = c;
    for (const auto& [name, exp] : m.factors()) {
      auto it = assignment.find(name);
      if (it == assignment.end()) throw ValidationError("no value for variable '" + name + "'");
      value *= power(it->second, exp);
    }
    total += value;
  }
  return total;
}

MultiPoly MultiPoly::substitute(const std::map<std::string, Rational>& assignment) const {
  MultiPoly out;
  for (const auto& [m, c] : terms_) {
    Rational value = c;
    std::vector<Monomial::Factor> rest;
    for (const auto& [name, exp] : m.factors()) {
      if (auto it = assignment.find(name); it != assignment.end())
        value *= power(it->second, exp);
      else
        rest.emplace_back(name, exp);
    }
    out.add_term(value, Monomial::from_factors(std::move(rest)));
  }
  return out;
}

std::string MultiPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    const bool negative = c < 0;
    const Rational magnitude = negative ? Rational(-c) : c;
    if (first)
      out += negative ? "-" : "";
    else
      out += negative ? " - " : " + ";
    first = false;

    std::string body;
    for (const auto& [name, exp] : m.factors()) {
      if (!body.empty()) body += '*';
      body += name;
      if (exp > 1) body += '^' + std::to_string(exp);
    }
    if (body.empty())
      out += prym::to_string(magnitude);
    else if (magnitude == 1)
      out += body;
    else
      out += prym::to_string(magnitude) + "*" + body;
  }
  return out;
}

namespace {

class PolyParser {
 public:
  explicit PolyParser(std::string_view text) : s_(text) {}

  MultiPoly parse() {
    MultiPoly out;
    skip_space();
    if (at_end()) fail("empty polynomial");
    bool negative = false;
    if (peek() == '-' || peek() == '+') negative = take() == '-';
    while (true) {
      auto [coef, mono] = parse_term();
      out.add_term(negative ? Rational(-coef) : coef, mono);
      skip_space();
      if (at_end()) break;
      const char sign = take();
      if (sign != '+' && sign != '-') fail("expected '+' or '-'");
      negative = sign == '-';
    }
    return out;
  }

 private:
  bool at_end() const { return pos_ >= s_.size(); }
  char peek() const { return s_[pos_]; }
  char take() { return s_[pos_++]; }
  void skip_space() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }
  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError("polynomial parse error at offset " + std::to_string(pos_) + ": " + what);
  }
  static bool ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
  static bool ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '.'; }

  std::string read_while(bool (*pred)(char)) {
    const auto start = pos_;
    while (!at_end() && pred(peek())) ++pos_;
    return std::string(s_.substr(start, pos_ - start));
  }

  std::pair<Rational, Monomial> parse_term() {
    Rational coef(1);
    std::vector<Monomial::Factor> factors;
    while (true) {
      skip_space();
      if (at_end()) fail("expected factor");
      if (std::isdigit(static_cast<unsigned char>(peek()))) {
        std::string lit = read_while([](char c) { return std::isdigit(static_cast<unsigned char>(c)) != 0; });
        if (!at_end() && peek() == '/') {
          ++pos_;
          std::string den = read_while([](char c) { return std::isdigit(static_cast<unsigned char>(c)) != 0; });
          if (den.empty()) fail("expected denominator");
          lit += "/" + den;
        }
        coef *= parse_rational(lit);
      } else if (ident_start(peek())) {
        std::string name = read_while(ident_char);
        std::uint32_t exp = 1;
        if (!at_end() && peek() == '^') {
          ++pos_;
          std::string digits = read_while([](char c) { return std::isdigit(static_cast<unsigned char>(c)) != 0; });
          if (digits.empty()) fail("expected exponent");
          exp = static_cast<std::uint32_t>(std::stoul(digits));
        }
        factors.emplace_back(std::move(name), exp);
      } else {
        fail(std::string("unexpected character '") + peek() + "'");
      }
      skip_space();
      if (at_end() || peek() != '*') break;
      ++pos_;
    }
    return {coef, Monomial::from_factors(std::move(factors))};
  }

  std::string_view s_;
  std::size_t pos_ = 0;
};

}  // namespace

MultiPoly MultiPoly::parse(std::string_view text) { return PolyParser(text).parse(); }

MultiPoly exact_div(const MultiPoly& p, const MultiPoly& q) {
  if (q.is_zero()) throw InapplicableError("division by the zero polynomial");
  const auto& [lead_mono, lead_coef] = *q.terms().begin();
  MultiPoly remainder = p;
  MultiPoly quotient;
  while (!remainder.is_zero()) {
    const auto& [mono, coef] = *remainder.terms().begin();
    auto factor = mono.divided_by(lead_mono);
    if (!factor) throw ConsistencyError("not divisible");
    const Rational c = coef / lead_coef;
    const Monomial m = *factor;
    quotient.add_term(c, m);
    for (const auto& [qm, qc] : q.terms()) remainder.add_term(-c * qc, qm * m);
  }
  return quotient;
}

}  // namespace prym
