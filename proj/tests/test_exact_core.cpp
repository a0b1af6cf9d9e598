#include <doctest.h>

#include <random>

#include "virmod/core/echelon.hpp"
#include "virmod/core/interpolate.hpp"
#include "virmod/core/key.hpp"
#include "virmod/core/laurent_vec.hpp"
#include "virmod/core/poly.hpp"
#include "virmod/core/rat_matrix.hpp"
#include "virmod/core/rational.hpp"

using namespace virmod;

namespace {

Rational random_rational(std::mt19937& rng) {
  std::uniform_int_distribution<long> num(-50, 50), den(1, 12);
  return make_rational(num(rng), den(rng));
}

Poly random_poly(std::mt19937& rng, int max_degree) {
  std::uniform_int_distribution<int> deg(0, max_degree);
  std::vector<Rational> c(deg(rng) + 1);
  for (auto& x : c) x = random_rational(rng);
  return Poly(std::move(c));
}

}  // namespace

TEST_CASE("rational parsing and canonical form") {
  CHECK(parse_rational("6/4") == make_rational(3, 2));
  CHECK(parse_rational(" -7 ") == -7);
  CHECK(parse_rational("-2/-4") == make_rational(1, 2));
  CHECK(to_string(parse_rational("10/-4")) == "-5/2");
  CHECK(to_string(Rational(3)) == "3");
  CHECK(parse_rational("4/6").get_den() == 3);
  CHECK_THROWS_AS(parse_rational("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("abc"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational(""), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("1.5"), std::invalid_argument);
}

TEST_CASE("power, factorial, binomial") {
  CHECK(power(Rational(2), 10) == 1024);
  CHECK(power(make_rational(2, 3), -2) == make_rational(9, 4));
  CHECK(power(Rational(-5), 0) == 1);
  CHECK(factorial(0) == 1);
  CHECK(factorial(6) == 720);
  CHECK(binomial(6, 2) == 15);
  CHECK(binomial(4, 7) == 0);
}

TEST_CASE("field axioms hold exactly on random rationals") {
  std::mt19937 rng(20240611);
  for (int i = 0; i < 300; ++i) {
    const Rational a = random_rational(rng), b = random_rational(rng), c = random_rational(rng);
    CHECK(Rational((a + b) + c) == Rational(a + (b + c)));
    CHECK(Rational((a * b) * c) == Rational(a * (b * c)));
    CHECK(Rational(a * (b + c)) == Rational(a * b + a * c));
    CHECK(Rational(a + b) == Rational(b + a));
    CHECK(Rational(a * b) == Rational(b * a));
    CHECK(Rational(a - a) == 0);
    if (a != 0) CHECK(Rational(a * (1 / a)) == 1);
  }
}

TEST_CASE("poly_shift examples") {
  CHECK(poly_shift(Poly::var(), 1) == Poly::linear(-1, 1));
  CHECK(poly_shift(Poly::monomial(1, 2), -2) == Poly({4, 4, 1}));
  CHECK(poly_shift(Poly::constant(1), 7) == Poly::constant(1));
}

TEST_CASE("poly_shift against the hand expansion (t + 2)^2") {
  // (t + 2)^2 = (t + 2)(t + 2) multiplied out coefficient by coefficient
  const Poly t_plus_2 = Poly::linear(2, 1);
  CHECK(poly_shift(Poly::monomial(1, 2), -2) == t_plus_2 * t_plus_2);
}

TEST_CASE("poly_shift preserves degree and leading coefficient, evaluates pointwise") {
  std::mt19937 rng(7);
  for (int i = 0; i < 60; ++i) {
    const Poly f = random_poly(rng, 7);
    const long m = static_cast<long>(rng() % 11) - 5;
    const Poly g = poly_shift(f, m);
    CHECK(g.degree() == f.degree());
    CHECK(g.leading() == f.leading());
    for (int s = -3; s <= 3; ++s) CHECK(g(Rational(s)) == f(Rational(s - m)));
  }
}

TEST_CASE("poly_shift is additive and composes") {
  std::mt19937 rng(11);
  for (int i = 0; i < 60; ++i) {
    const Poly f = random_poly(rng, 6), g = random_poly(rng, 6);
    const long m = static_cast<long>(rng() % 9) - 4, k = static_cast<long>(rng() % 9) - 4;
    CHECK(poly_shift(f + g, m) == poly_shift(f, m) + poly_shift(g, m));
    CHECK(poly_shift(poly_shift(f, m), k) == poly_shift(f, m + k));
  }
}

TEST_CASE("poly arithmetic") {
  const Poly f({1, 0, 2});
  const Poly g = Poly::linear(-1, 1);
  CHECK((f * g).degree() == f.degree() + g.degree());
  CHECK((f - f).is_zero());
  CHECK(Poly().degree() == -1);
  CHECK(Poly({1, 2, 0, 0}).coeffs().size() == 2);
  const auto [q, rem] = (f * g + Poly::constant(5)).divmod_linear(1);
  CHECK(q == f);
  CHECK(rem == 5);
  CHECK(Poly({3, make_rational(-1, 2), 2}).to_string() == "2t^2 - 1/2 t + 3");
  CHECK(Poly({-6, 2}).to_string() == "2t - 6");
  CHECK(Poly().to_string() == "0");
  CHECK(taylor_shift(Poly::monomial(1, 3), 1) == Poly({1, 3, 3, 1}));
}

TEST_CASE("laurent vectors") {
  LaurentVec v = LaurentVec::monomial(2, 2);
  v.add(-1, make_rational(-1, 2));
  CHECK(v.to_string() == "2 x^2 - 1/2 x^-1");
  v.add(2, -2);
  CHECK(v.entries().size() == 1);
  CHECK(LaurentVec().to_string() == "0");
  CHECK((v - v).is_zero());
}

TEST_CASE("span_insert examples") {
  const RatMatrix empty(0, 2);
  const Rational zero[] = {0, 0};
  auto r0 = span_insert(empty, zero);
  CHECK_FALSE(r0.was_new);
  CHECK(r0.basis.rows() == 0);

  const Rational e1[] = {1, 0};
  auto r1 = span_insert(empty, e1);
  CHECK(r1.was_new);
  CHECK(r1.basis == RatMatrix{{1, 0}});

  const RatMatrix ones{{1, 1}};
  const Rational twos[] = {2, 2};
  auto r2 = span_insert(ones, twos);
  CHECK_FALSE(r2.was_new);
  CHECK(r2.basis == ones);

  const Rational three[] = {1, 2, 3};
  CHECK_THROWS_AS(span_insert(ones, three), std::invalid_argument);
}

TEST_CASE("span_insert is idempotent and grows rank by one") {
  std::mt19937 rng(3);
  RatMatrix basis(0, 5);
  for (int i = 0; i < 12; ++i) {
    std::vector<Rational> v(5);
    for (auto& x : v) x = rng() % 3 == 0 ? Rational(0) : random_rational(rng);
    const auto before = rank(basis);
    const auto once = span_insert(basis, v);
    CHECK(rank(once.basis) == before + (once.was_new ? 1 : 0));
    const auto twice = span_insert(once.basis, v);
    CHECK_FALSE(twice.was_new);
    CHECK(twice.basis == once.basis);
    basis = once.basis;
  }
  CHECK(rank(basis) <= 5);
}

TEST_CASE("rref, rank, inverse") {
  const RatMatrix a{{2, 4, 2}, {1, 2, 3}, {3, 6, 5}};
  CHECK(rank(a) == 2);
  CHECK(rref(a) == RatMatrix{{1, 2, 0}, {0, 0, 1}});
  CHECK_FALSE(inverse(a).has_value());
  const RatMatrix b{{2, 1}, {7, 4}};
  const auto inv = inverse(b);
  REQUIRE(inv.has_value());
  CHECK(*inv * b == RatMatrix::identity(2));
}

TEST_CASE("sparse echelon membership matches dense rank") {
  std::mt19937 rng(5);
  SparseEchelon e;
  RatMatrix dense(0, 6);
  for (int i = 0; i < 10; ++i) {
    Vec v;
    std::vector<Rational> d(6);
    for (int k = 0; k < 6; ++k)
      if (rng() % 2) {
        d[k] = random_rational(rng);
        v.add(Key{k}, d[k]);
      }
    const bool was_new = !e.insert(v).is_zero();
    const auto r = span_insert(dense, d);
    CHECK(was_new == r.was_new);
    dense = r.basis;
    CHECK(e.contains(v));
    CHECK(e.rank() == rank(dense));
  }
  const auto rows = e.rows();
  for (std::size_t i = 1; i < rows.size(); ++i) CHECK(rows[i - 1].begin()->first < rows[i].begin()->first);
}

TEST_CASE("interpolation recovers polynomial coefficients exactly") {
  std::mt19937 rng(17);
  for (int trial = 0; trial < 20; ++trial) {
    const Poly p = random_poly(rng, 6);
    std::vector<Rational> nodes, values;
    for (int k = -3; k <= 4; ++k) {
      nodes.emplace_back(k);
      values.push_back(p(Rational(k)));
    }
    const auto c = interpolate(nodes, values);
    for (std::size_t j = 0; j < c.size(); ++j) CHECK(c[j] == p.coeff(j));
  }
  const Rational nodes[] = {1, 1};
  const Rational values[] = {0, 1};
  CHECK_THROWS_AS(interpolate(nodes, values), std::invalid_argument);
}

TEST_CASE("keys order lexicographically and concatenate") {
  CHECK(Key{0, 5} < Key{1, 0});
  CHECK(Key{1, 2} < Key{1, 3});
  CHECK(Key::concat(Key{1}, Key{2, 3}) == Key{1, 2, 3});
  CHECK(Key{4, 5, 6}.tail(1) == Key{5, 6});
  CHECK(Key{4, 5}.to_string() == "4,5");
}
