#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "virmod/av/a_module.hpp"
#include "virmod/av/h_basis.hpp"
#include "virmod/av/omega.hpp"
#include "virmod/verifier/verifier.hpp"

using namespace virmod;

namespace {

Poly random_poly(std::mt19937& rng, int max_degree) {
  std::uniform_int_distribution<int> deg(0, max_degree), num(-9, 9), den(1, 4);
  std::vector<Rational> c(deg(rng) + 1);
  for (auto& x : c) x = make_rational(num(rng), den(rng));
  if (c.back() == 0) c.back() = 1;
  return Poly(std::move(c));
}

bool same_function(const Poly& p, const oracle::Fn1& f, int degree_bound) {
  for (int s = -degree_bound - 2; s <= degree_bound + 2; ++s)
    if (p(Rational(s)) != f(Rational(s))) return false;
  return true;
}

Vec xn(long n, const Rational& c = 1) { return to_vec(LaurentVec::monomial(c, n)); }

}  // namespace

TEST_CASE("omega_d examples") {
  CHECK(omega_d({1, 0}, 0, Poly::constant(1)) == Poly::var());
  CHECK(omega_d({2, 3}, 1, Poly::constant(1)) == Poly::linear(-6, 2));
  const Poly t1 = Poly::linear(1, 1);
  CHECK(omega_d({2, 1}, -1, Poly::var()) == make_rational(1, 2) * (t1 * t1));
}

TEST_CASE("omega_x examples") {
  const Poly f({1, 0, 0, 1});
  CHECK(omega_x({5, 0}, 0, f) == f);
  CHECK(omega_x({2, 0}, 1, Poly::var()) == Poly::linear(-2, 2));
  CHECK(omega_x({3, 0}, -4, omega_x({3, 0}, 4, f)) == f);
}

TEST_CASE("Omega actions agree with pointwise evaluation") {
  std::mt19937 rng(99);
  const OmegaParams params[] = {{1, 0}, {2, 3}, {make_rational(1, 3), make_rational(-1, 2)}, {-2, 1}};
  for (const auto& p : params)
    for (int i = 0; i < 25; ++i) {
      const Poly f = random_poly(rng, 5);
      const int m = static_cast<int>(rng() % 9) - 4;
      const auto ff = oracle::fn_of_poly_vec(to_vec(f));
      const Poly d = omega_d(p, m, f);
      CHECK(d.degree() == f.degree() + 1);
      CHECK(same_function(d, oracle::omega_d(p.lambda, p.beta, m, ff), 6));
      CHECK(same_function(omega_x(p, m, f), oracle::omega_x(p.lambda, m, ff), 5));
    }
}

TEST_CASE("Omega requires lambda != 0") { CHECK_THROWS_AS(OmegaModule(0, 1), std::invalid_argument); }

TEST_CASE("a_d examples") {
  for (int m = -3; m <= 3; ++m) CHECK(a_d({0, 1}, m, LaurentVec::monomial(1, 0)) == LaurentVec::monomial(m, m));
  for (int n = -3; n <= 3; ++n) CHECK(a_d({0, 0}, 0, LaurentVec::monomial(1, n)) == LaurentVec::monomial(n, n));
  CHECK(a_d({make_rational(1, 2), 2}, -1, LaurentVec::monomial(1, 3)) ==
        LaurentVec::monomial(make_rational(3, 2), 2));
}

TEST_CASE("g_of is the composite x^-m d_m") {
  const OmegaModule w(5, 2);
  // x^-3 (5^3 (t - 6)) = t + 3 - 6
  CHECK(to_poly(g_of(w, 3, to_vec(Poly::constant(1)))) == Poly::linear(-3, 1));
  for (int m = -4; m <= 4; ++m) {
    const Vec f = to_vec(Poly({1, 2, 3}));
    CHECK(g_of(w, m, f) == w.x(-m, w.d(m, f)));
  }
  const Vec f = to_vec(Poly({0, 1, -1}));
  CHECK(g_of(w, 0, f) == w.d(0, f));

  const AModule a(make_rational(1, 3), -2);
  for (int m = -3; m <= 3; ++m)
    for (int n = -3; n <= 3; ++n) CHECK(g_of(a, m, xn(n)) == xn(n, Rational(n + make_rational(1, 3) - 2 * m)));
}

TEST_CASE("h_poly examples") {
  for (int m = -3; m <= 3; ++m) CHECK(h_poly(m, 0) == Poly::constant(1));
  CHECK(h_poly(0, 2) == Poly({2, -3, 1}));
  CHECK(h_poly(-1, 1) == Poly::var());
  CHECK(h_poly(2, 3).leading() == 1);
  CHECK_THROWS_AS(h_poly(0, -1), std::invalid_argument);
}

TEST_CASE("h-basis coordinates") {
  CHECK(to_h_basis(Poly::constant(1), 4).coords == std::vector<Rational>{1});
  CHECK(to_h_basis(Poly::var(), 0).coords == std::vector<Rational>{1, 1});
  const Poly f({5, -2, 0, 1});
  CHECK(from_h_basis(to_h_basis(f, -3)) == f);
  for (int m = -4; m <= 4; ++m)
    for (int n = 0; n <= 5; ++n) {
      const auto c = to_h_basis(h_poly(m, n), m);
      CHECK(c.anchor == m);
      REQUIRE(c.coords.size() == static_cast<std::size_t>(n + 1));
      for (int j = 0; j <= n; ++j) CHECK(c.coords[j] == (j == n ? 1 : 0));
    }
  std::mt19937 rng(1);
  for (int i = 0; i < 50; ++i) {
    const Poly g = random_poly(rng, 8);
    const int m = static_cast<int>(rng() % 11) - 5;
    const auto c = to_h_basis(g, m);
    CHECK(c.coords.size() == static_cast<std::size_t>(std::max<long>(g.degree() + 1, 0)));
    CHECK(from_h_basis(c) == g);
  }
}

TEST_CASE("bracket example on Omega(1,2)") {
  const OmegaModule w(1, 2);
  const Vec t = to_vec(Poly::var());
  const Vec lhs = w.d(1, w.d(-1, t)) - w.d(-1, w.d(1, t));
  CHECK(lhs == to_vec(Poly::monomial(-2, 2)));
  CHECK(lhs == Rational(-2) * w.d(0, t));
}

TEST_CASE("bracket coefficient identity on A(0,0)") {
  const AModule a(0, 0);
  for (int i = -4; i <= 4; ++i)
    for (int j = -4; j <= 4; ++j)
      for (int n = -4; n <= 4; ++n) {
        const Vec lhs = a.d(i, a.d(j, xn(n))) - a.d(j, a.d(i, xn(n)));
        // d_m x^n = n x^(n+m), so the commutator is (j - i) n x^(n+i+j)
        CHECK(lhs == xn(n + i + j, Rational((j - i) * n)));
      }
}

TEST_CASE("compatibility example on Omega(2,1)") {
  const OmegaModule w(2, 1);
  const Vec one = to_vec(Poly::constant(1));
  const Vec lhs = w.x(2, one);
  const Vec rhs = w.d(1, w.x(1, one)) - w.x(1, w.d(1, one));
  CHECK(lhs == to_vec(Poly::constant(4)));
  CHECK(rhs == lhs);
}

TEST_CASE("A and Omega pass the identity suites on wide windows") {
  const Window wide{5, 6, 5};
  for (const auto& p : parameter_sweep()) {
    const OmegaModule w(p.lambda, p.beta);
    const AModule a(p.alpha, p.beta);
    for (const AVModule* m : {static_cast<const AVModule*>(&w), static_cast<const AVModule*>(&a)}) {
      CHECK(suite_virasoro_bracket(*m, wide).ok());
      CHECK(suite_av_compat(*m, wide).ok());
      CHECK(suite_g(*m, wide).ok());
    }
  }
}

TEST_CASE("basis windows") {
  const OmegaModule w(1, 0);
  CHECK(w.basis(Caps{3, 0}).size() == 4);
  CHECK(w.in_window(Key{3}, Caps{3, 0}));
  CHECK_FALSE(w.in_window(Key{4}, Caps{3, 0}));
  const AModule a(0, 0);
  CHECK(a.basis(Caps{2, 0}).size() == 5);
  CHECK(a.in_window(Key{-2}, Caps{2, 0}));
  CHECK(w.describe() == "Omega(1,0)");
  CHECK(a.describe() == "A(0,0)");
}
