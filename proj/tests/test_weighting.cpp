#include <doctest.h>

#include "virmod/av/a_module.hpp"
#include "virmod/probe/closure.hpp"
#include "virmod/verifier/verifier.hpp"
#include "virmod/weighting/weighting.hpp"

using namespace virmod;

TEST_CASE("weight quotient of Omega is evaluation at n") {
  const OmegaModule w(2, 3);
  for (int n = -4; n <= 4; ++n) {
    const WeightQuotient q = weight_quotient_omega(w, n);
    CHECK(q.weight() == n);
    CHECK(q.generator() == Poly::linear(-n, 1));
    CHECK(q(Poly::linear(-n, 1)) == 0);
    CHECK(q(Poly::constant(1)) == 1);
    const Poly f({3, -1, 0, 2});
    CHECK(q.cofactor(f) * q.generator() + Poly::constant(q(f)) == f);
  }
  CHECK(weight_quotient_omega(w, 3)(Poly::monomial(1, 2)) == 9);
}

TEST_CASE("weighted action on Omega") {
  const OmegaModule w(7, make_rational(1, 2));
  for (int n = -3; n <= 3; ++n) CHECK(weighted_action_omega(w, 0, n) == n);
  CHECK(weighted_action_omega(OmegaModule(2, 1), 3, 0) == 0);
  CHECK(weighted_action_omega(OmegaModule(2, 0), 3, 1) == 8 * 4);
  for (const Rational& lambda : {Rational(1), Rational(2), make_rational(1, 3)}) {
    const OmegaModule om(lambda, make_rational(-1, 2));
    const AModule a(0, make_rational(3, 2));
    for (int m = -5; m <= 5; ++m)
      for (int n = -5; n <= 5; ++n) {
        const Vec image = a.d(m, Vec::unit(Key{n}));
        CHECK(weighted_action_omega(om, m, n, true) == image.coeff(Key{n + m}));
      }
  }
}

TEST_CASE("weight_F examples") {
  const Rational beta = make_rational(2, 3);
  {
    const FModule f(make_Mgamma(0, 1), std::make_shared<OmegaModule>(5, beta));
    const OmegaModule w(5, beta);
    for (int m = -3; m <= 3; ++m)
      for (int n = -3; n <= 3; ++n)
        CHECK(weight_F(f, m, n, Key{0}) == Vec::unit(Key{0, n + m}, weighted_action_omega(w, m, n, true)));
  }
  {
    const Rational gamma = -2;
    const FModule f(make_Mgamma(gamma, 1), std::make_shared<OmegaModule>(1, beta));
    const AModule target(0, Rational(1 - beta + gamma));
    for (int m = -3; m <= 3; ++m)
      for (int n = -3; n <= 3; ++n) {
        Vec lifted;
        lifted.axpy_prefixed(1, Key{0}, target.d(m, Vec::unit(Key{n})));
        CHECK(weight_F(f, m, n, Key{0}) == lifted);
      }
  }
  {
    const auto s = make_shift_module_B1();
    const FModule f(s, std::make_shared<OmegaModule>(3, beta));
    const FModule fa(s, std::make_shared<AModule>(0, Rational(1 - beta)));
    for (const Key& b : s.carrier.basis(4))
      for (int m = -4; m <= 4; ++m)
        for (int n = -4; n <= 4; ++n) CHECK(weight_F(f, m, n, b) == f_weight_action(fa, m, b, n));
  }
}

TEST_CASE("weighting tables against the A(0, 1 - beta) tables") {
  for (const Rational& beta : {Rational(0), Rational(1), make_rational(-1, 2), Rational(3)})
    for (const Rational& lambda : {Rational(1), Rational(2), make_rational(1, 3)}) {
      const OmegaModule w(lambda, beta);
      const AModule a(0, Rational(1 - beta));
      const WeightTable lhs = weighting_table(w, 5, 0);
      CHECK(lhs.size() == 11 * 11);
      CHECK(lhs == weight_module_table(a, 5, 0));
      CHECK_FALSE(first_difference(lhs, weight_module_table(a, 5, 0)).has_value());
    }
  // beta = 1: d_m w_n = n w_(n+m)
  const WeightTable t = weighting_table(OmegaModule(1, 1), 3, 0);
  for (const auto& [idx, image] : t) {
    const auto& [m, n, b] = idx;
    CHECK(image == (n == 0 ? Vec{} : Vec::unit(Key{n + m}, n)));
  }
}

TEST_CASE("tables print byte-identically across lambda") {
  const auto text = [](const Rational& lambda) {
    return format_table(weighting_table(FModule(make_shift_module_B1(), std::make_shared<OmegaModule>(lambda, 2)), 3, 2));
  };
  CHECK(text(1) == text(2));
  CHECK(text(1) == text(make_rational(-1, 3)));
  CHECK(format_table(weighting_table(OmegaModule(3, 2), 2, 0)) == format_table(weight_module_table(AModule(0, -1), 2, 0)));
  CHECK(format_table(weighting_table(OmegaModule(1, 0), 1, 0)).find("d_1 w_0 = 1 w_1") != std::string::npos);
}

TEST_CASE("lambda invariance report") {
  for (const auto& m : {make_Mgamma(make_rational(1, 2), 1), make_shift_module_B1()}) {
    const auto r = lambda_invariance_report(m, 2, {1, 2, 3}, 4, 2);
    CHECK(r.identical);
    CHECK(r.tables.size() == 3);
    CHECK_FALSE(r.mismatch.has_value());
    CHECK(lambda_invariance_report(m, 2, {5}, 3, 1).identical);
  }
  const auto zero = weighting_table(OmegaModule(1, 0), 3, 0);
  const auto one = weighting_table(OmegaModule(1, 1), 3, 0);
  const auto diff = first_difference(zero, one);
  REQUIRE(diff.has_value());
  CHECK(zero.at({1, 0, Key{}}) == Vec::unit(Key{1}, 1));
  CHECK(one.at({1, 0, Key{}}).is_zero());
}

TEST_CASE("weighting suite at the sweep points") {
  const Window w{4, 4, 2};
  for (const auto& p : parameter_sweep()) {
    const auto r = suite_weighting(p.lambda, p.beta, w, {make_Mgamma(p.gamma, 1), make_shift_module_B1()});
    CHECK(r.ok());
    CHECK(r.checks > 0);
  }
}

TEST_CASE("weighting does not preserve irreducibility") {
  ProbeConfig cfg;
  // the image of Omega(lambda, 1) is A(0, 0), where x^0 spans a submodule
  const auto image = sweep(AModule(0, 0), default_seeds(AModule(0, 0)), cfg);
  CHECK(image.verdict == Reducibility::Reducible);
  const OmegaModule w(2, 1);
  const auto source = sweep(w, default_seeds(w), cfg);
  CHECK(source.verdict == Reducibility::IrreducibleEvidence);
}
