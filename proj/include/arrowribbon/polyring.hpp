#pragma once

// Exact sparse multivariate Laurent polynomials over the integers.
//
// Exponents are stored in units of 1/4 so that t^(1/4), q^(1/2) and
// (X/Y)^(1/2) stay exact. Coefficients are arbitrary precision.

#include <compare>
#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "arrowribbon/error.hpp"

namespace arrowribbon {

using Integer = boost::multiprecision::cpp_int;

/// Variable families in canonical output order.
enum class Family : std::uint8_t { a, c, A, B, d, t, q, X, Y, Z, x, y, b, alpha, K, named };

/// Orders edge identifiers "naturally": numeric ids by value, then the rest
/// lexicographically.
std::strong_ordering compare_labels(std::string_view lhs, std::string_view rhs);

struct VarSymbol {
  Family family = Family::a;
  std::string label;    // edge id for b/x/y/alpha, name for `named`
  int half_index = 0;   // K only: twice the subscript, always > 0

  static VarSymbol plain(Family f) { return VarSymbol{f, {}, 0}; }
  static VarSymbol edge(Family f, std::string id) { return VarSymbol{f, std::move(id), 0}; }
  static VarSymbol k(int half_index);
  static VarSymbol named(std::string name) { return VarSymbol{Family::named, std::move(name), 0}; }

  std::string to_string() const;

  friend bool operator==(const VarSymbol&, const VarSymbol&) = default;
  friend std::strong_ordering operator<=>(const VarSymbol& lhs, const VarSymbol& rhs);
};

/// Exponent in quarters: Exponent{6} is 3/2.
using Quarters = std::int32_t;
constexpr Quarters kWhole = 4;

std::string format_exponent(Quarters q);

class Monomial {
 public:
  using Factor = std::pair<VarSymbol, Quarters>;

  Monomial() = default;
  /// Factors may come in any order; zero exponents are dropped and repeats merged.
  explicit Monomial(std::vector<Factor> factors);
  static Monomial var(VarSymbol v, Quarters q = kWhole);

  const std::vector<Factor>& factors() const { return factors_; }
  bool is_one() const { return factors_.empty(); }
  Quarters degree() const;
  /// Exponent of `v` in quarters (0 if absent).
  Quarters exponent(const VarSymbol& v) const;
  bool has_fractional_exponent() const;

  Monomial operator*(const Monomial& rhs) const;
  Monomial inverse() const;
  /// Raises every exponent to `q` quarters; throws if the result is not a
  /// quarter-integer exponent.
  Monomial pow_quarters(Quarters q) const;

  friend bool operator==(const Monomial&, const Monomial&) = default;

 private:
  std::vector<Factor> factors_;  // sorted by variable, no zero exponent
};

/// Graded order: smaller total degree first; ties broken lexicographically
/// with a larger exponent on an earlier variable first.
struct TermOrder {
  bool operator()(const Monomial& lhs, const Monomial& rhs) const;
};

class LaurentPoly {
 public:
  using TermMap = std::map<Monomial, Integer, TermOrder>;

  LaurentPoly() = default;
  LaurentPoly(long long constant);  // NOLINT(google-explicit-constructor)
  LaurentPoly(Monomial m, Integer coeff = 1);
  static LaurentPoly var(VarSymbol v, Quarters q = kWhole) { return LaurentPoly(Monomial::var(std::move(v), q)); }

  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  /// Single term with coefficient +1 or -1.
  bool is_unit_monomial() const;
  bool has_variable(Family f) const;

  void add_term(const Monomial& m, const Integer& coeff);

  LaurentPoly& operator+=(const LaurentPoly& rhs);
  LaurentPoly& operator-=(const LaurentPoly& rhs);
  LaurentPoly& operator*=(const LaurentPoly& rhs);
  LaurentPoly operator-() const;
  friend LaurentPoly operator+(LaurentPoly lhs, const LaurentPoly& rhs) { return lhs += rhs; }
  friend LaurentPoly operator-(LaurentPoly lhs, const LaurentPoly& rhs) { return lhs -= rhs; }
  friend LaurentPoly operator*(const LaurentPoly& lhs, const LaurentPoly& rhs);
  friend bool operator==(const LaurentPoly& lhs, const LaurentPoly& rhs) { return lhs.terms_ == rhs.terms_; }

  LaurentPoly pow(unsigned n) const;

 private:
  TermMap terms_;
};

LaurentPoly poly_mul(const LaurentPoly& p, const LaurentPoly& q);

using Substitution = std::map<VarSymbol, LaurentPoly>;

/// Ring homomorphism extending `sigma`; unmapped variables are fixed.
/// A variable raised to a negative power needs a unit-monomial image, and
/// one raised to a fractional power needs a monomial image with coefficient 1.
LaurentPoly substitute(const LaurentPoly& p, const Substitution& sigma);

/// Canonical text form, e.g. "t + t^3 - t^4" or "a*c^2*b[1]*K[1/2]^2".
std::string format(const LaurentPoly& p);
/// Inverse of format(); whitespace is insignificant. Throws Error(Parse).
LaurentPoly parse_poly(std::string_view text);

// Shorthands used throughout the library.
namespace vars {
inline LaurentPoly a() { return LaurentPoly::var(VarSymbol::plain(Family::a)); }
inline LaurentPoly c() { return LaurentPoly::var(VarSymbol::plain(Family::c)); }
inline LaurentPoly A(Quarters q = kWhole) { return LaurentPoly::var(VarSymbol::plain(Family::A), q); }
inline LaurentPoly B(Quarters q = kWhole) { return LaurentPoly::var(VarSymbol::plain(Family::B), q); }
inline LaurentPoly d(Quarters q = kWhole) { return LaurentPoly::var(VarSymbol::plain(Family::d), q); }
inline LaurentPoly t(Quarters q = kWhole) { return LaurentPoly::var(VarSymbol::plain(Family::t), q); }
inline LaurentPoly q(Quarters e = kWhole) { return LaurentPoly::var(VarSymbol::plain(Family::q), e); }
inline LaurentPoly X(Quarters q = kWhole) { return LaurentPoly::var(VarSymbol::plain(Family::X), q); }
inline LaurentPoly Y(Quarters q = kWhole) { return LaurentPoly::var(VarSymbol::plain(Family::Y), q); }
inline LaurentPoly Z(Quarters q = kWhole) { return LaurentPoly::var(VarSymbol::plain(Family::Z), q); }
inline LaurentPoly b(const std::string& e) { return LaurentPoly::var(VarSymbol::edge(Family::b, e)); }
inline LaurentPoly xe(const std::string& e) { return LaurentPoly::var(VarSymbol::edge(Family::x, e)); }
inline LaurentPoly ye(const std::string& e) { return LaurentPoly::var(VarSymbol::edge(Family::y, e)); }
inline LaurentPoly alpha(const std::string& e) { return LaurentPoly::var(VarSymbol::edge(Family::alpha, e)); }
inline LaurentPoly K(int half_index) {
  return half_index == 0 ? LaurentPoly(1) : LaurentPoly::var(VarSymbol::k(half_index));
}
inline LaurentPoly named(const std::string& n) { return LaurentPoly::var(VarSymbol::named(n)); }
}  // namespace vars

/// Substitution sending every K variable to 1.
LaurentPoly drop_k_variables(const LaurentPoly& p);

}  // namespace arrowribbon
