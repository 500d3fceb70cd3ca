#include <doctest.h>

#include <random>

#include "arrowribbon/polyring.hpp"

using namespace arrowribbon;

namespace {

LaurentPoly random_poly(std::mt19937_64& rng) {
  const std::vector<VarSymbol> pool{VarSymbol::plain(Family::a), VarSymbol::plain(Family::A), VarSymbol::plain(Family::t),
                                    VarSymbol::edge(Family::b, "2"), VarSymbol::edge(Family::b, "10"),
                                    VarSymbol::k(1), VarSymbol::k(4), VarSymbol::named("x")};
  std::uniform_int_distribution<int> terms(0, 4);
  std::uniform_int_distribution<int> coeff(-5, 5);
  std::uniform_int_distribution<int> var(0, static_cast<int>(pool.size()) - 1);
  std::uniform_int_distribution<int> exp(-3, 3);
  std::uniform_int_distribution<int> quarter(0, 3);
  LaurentPoly p;
  const int n = terms(rng);
  for (int i = 0; i < n; ++i) {
    std::vector<Monomial::Factor> fs;
    for (int j = 0; j < 3; ++j) {
      const VarSymbol v = pool[var(rng)];
      // Fractional exponents only on t.
      const Quarters q = exp(rng) * kWhole + (v.family == Family::t ? quarter(rng) : 0);
      fs.emplace_back(v, q);
    }
    p.add_term(Monomial(fs), coeff(rng));
  }
  return p;
}

}  // namespace

TEST_CASE("products") {
  using namespace vars;
  const LaurentPoly p = A() + B();
  CHECK(LaurentPoly(1) * p == p);
  CHECK((A() + B()) * (A() - B()) == A().pow(2) - B().pow(2));
  CHECK(poly_mul(a() * c(), a() * c() * K(1)) == a().pow(2) * c().pow(2) * K(1));
  CHECK(format(a().pow(2) * c().pow(2) * K(1)) == "a^2*c^2*K[1/2]");
}

TEST_CASE("ring axioms on random values") {
  std::mt19937_64 rng(7);
  for (int i = 0; i < 300; ++i) {
    const LaurentPoly p = random_poly(rng);
    const LaurentPoly q = random_poly(rng);
    const LaurentPoly r = random_poly(rng);
    CHECK((p * q) * r == p * (q * r));
    CHECK(p * (q + r) == p * q + p * r);
    CHECK(p * q == q * p);
    CHECK(p + q == q + p);
    CHECK((p - p).is_zero());
  }
}

TEST_CASE("substitution") {
  using namespace vars;
  const VarSymbol vA = VarSymbol::plain(Family::A);
  const VarSymbol vB = VarSymbol::plain(Family::B);
  const VarSymbol vd = VarSymbol::plain(Family::d);
  CHECK(substitute(A() * B(), {{vB, A(-kWhole)}}) == LaurentPoly(1));
  const LaurentPoly loop = -A(2 * kWhole) - A(-2 * kWhole);
  CHECK(substitute(d(), {{vd, loop}}) == loop);
  CHECK(format(loop) == "-A^-2 - A^2");
  try {
    substitute(A(-kWhole), {{vA, A() + LaurentPoly(1)}});
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::NonInvertibleSubstitution);
  }
  // Positive powers of a non-monomial image are fine.
  CHECK(substitute(A(2 * kWhole), {{vA, A() + LaurentPoly(1)}}) == A().pow(2) + 2 * A() + LaurentPoly(1));
  // Quarter powers through a monomial image.
  CHECK(substitute(A(), {{vA, t(-1)}}) == t(-1));
  CHECK(substitute(X(2), {{VarSymbol::plain(Family::X), A() * d() * B(-kWhole)}}) == A(2) * d(2) * B(-2));
}

TEST_CASE("substitution is a homomorphism") {
  std::mt19937_64 rng(11);
  const Substitution sigma{{VarSymbol::plain(Family::a), vars::A(-kWhole) * vars::t(3)},
                           {VarSymbol::k(1), vars::named("x") * LaurentPoly(-1)},
                           {VarSymbol::edge(Family::b, "2"), vars::a()}};
  for (int i = 0; i < 200; ++i) {
    const LaurentPoly p = random_poly(rng);
    const LaurentPoly q = random_poly(rng);
    CHECK(substitute(p * q, sigma) == substitute(p, sigma) * substitute(q, sigma));
    CHECK(substitute(p + q, sigma) == substitute(p, sigma) + substitute(q, sigma));
  }
}

TEST_CASE("text form") {
  CHECK(format(LaurentPoly()) == "0");
  CHECK(parse_poly("a*c*K[1/2]") == vars::a() * vars::c() * vars::K(1));
  CHECK(parse_poly(" t + t^3 - t^4 ") == vars::t() + vars::t(12) - vars::t(16));
  CHECK(parse_poly("2a") == 2 * vars::a());
  CHECK(format(parse_poly("-t^4 + t^3 + t")) == "t + t^3 - t^4");
  CHECK(format(parse_poly("x^2 + y + x")) == "x + y + x^2");
  CHECK(format(parse_poly("t^-1/4 + 3*q^1/2")) == "t^-1/4 + 3*q^1/2");
  CHECK(parse_poly("K[0]*a") == vars::a());
  CHECK(parse_poly("0").is_zero());
  CHECK(format(parse_poly("b[10]*b[2]*b[x]")) == "b[2]*b[10]*b[x]");
  for (const char* bad : {"a*", "K[1/3]", "t^1/3", "b[]", "a + + c", "a^"}) {
    CAPTURE(bad);
    CHECK_THROWS_AS(parse_poly(bad), Error);
  }
}

TEST_CASE("round trip on random values") {
  std::mt19937_64 rng(3);
  for (int i = 0; i < 500; ++i) {
    const LaurentPoly p = random_poly(rng);
    CAPTURE(format(p));
    CHECK(parse_poly(format(p)) == p);
  }
}
