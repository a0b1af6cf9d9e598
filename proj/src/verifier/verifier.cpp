#include "virmod/verifier/verifier.hpp"

#include <map>

#include "virmod/av/a_module.hpp"
#include "virmod/av/h_basis.hpp"
#include "virmod/av/omega.hpp"
#include "virmod/f/f_module.hpp"
#include "virmod/weighting/weighting.hpp"

namespace virmod {

namespace {

SuiteResult start(std::string suite, std::string module, const Window& w) {
  SuiteResult r;
  r.suite = std::move(suite);
  r.module = std::move(module);
  r.window = w;
  return r;
}

void expect(SuiteResult& r, const AVModule& module, const std::string& op, const Vec& lhs,
            const Vec& rhs, const std::string& witness) {
  ++r.checks;
  if (lhs == rhs) return;
  r.failures.push_back({op, module.format(lhs), module.format(rhs), witness});
}

std::string on(const AVModule& module, const Key& b) {
  return "v=" + module.format(Vec::unit(b));
}

std::string br_element(const Vec& v) {
  if (v.is_zero()) return "0";
  std::string s;
  for (const auto& [k, c] : v) {
    if (!s.empty()) s += " + ";
    s += c.get_str() + " e[" + k.to_string() + "]";
  }
  return s;
}

Caps caps_of(const Window& w) { return Caps{w.degree, w.carrier}; }

}  // namespace

SuiteResult suite_virasoro_bracket(const AVModule& module, const Window& w) {
  SuiteResult r = start("bracket", module.describe(), w);
  const int M = w.modes;
  for (const Key& b : module.basis(caps_of(w))) {
    const Vec v = Vec::unit(b);
    const Vec cv = module.c(v);
    std::map<int, Vec> once;  // d_s v, |s| <= 2M
    for (int s = -2 * M; s <= 2 * M; ++s) once[s] = module.d(s, v);
    std::map<std::pair<int, int>, Vec> twice;  // d_i d_j v
    for (int i = -M; i <= M; ++i)
      for (int j = -M; j <= M; ++j) twice[{i, j}] = module.d(i, once[j]);
    for (int i = -M; i <= M; ++i)
      for (int j = -M; j <= M; ++j) {
        Vec lhs = twice[{i, j}] - twice[{j, i}];
        Vec rhs = Rational(j - i) * once[i + j];
        if (i == -j) rhs.axpy(Rational(i * i * i - i, 12), cv);
        expect(r, module, "[d_i,d_j]", lhs, rhs,
               "i=" + std::to_string(i) + " j=" + std::to_string(j) + " " + on(module, b));
      }
  }
  return r;
}

SuiteResult suite_av_compat(const AVModule& module, const Window& w) {
  SuiteResult r = start("compat", module.describe(), w);
  const int M = w.modes;
  for (const Key& b : module.basis(caps_of(w))) {
    const Vec v = Vec::unit(b);
    expect(r, module, "c", module.c(v), Vec{}, on(module, b));
    for (int m = -M; m <= M; ++m) {
      const Vec xm = module.x(m, v);
      for (int n = -M; n <= M; ++n) {
        Vec lhs = Rational(m) * module.x(n + m, v);
        Vec rhs = module.d(n, xm) - module.x(m, module.d(n, v));
        expect(r, module, "m x^(n+m) = [d_n, x^m]", lhs, rhs,
               "m=" + std::to_string(m) + " n=" + std::to_string(n) + " " + on(module, b));
      }
    }
  }
  return r;
}

SuiteResult suite_g(const AVModule& module, const Window& w) {
  SuiteResult r = start("g", module.describe(), w);
  const int M = w.modes;
  for (const Key& b : module.basis(caps_of(w))) {
    const Vec v = Vec::unit(b);
    std::map<int, Vec> g1;
    for (int s = -2 * M; s <= 2 * M; ++s) g1[s] = module.g(s, v);
    for (int m = -M; m <= M; ++m) {
      expect(r, module, "d_m = x^m g(m)", module.d(m, v), module.x(m, g1[m]),
             "m=" + std::to_string(m) + " " + on(module, b));
      for (int k = -M; k <= M; ++k) {
        Vec lhs = module.g(m, g1[k]) - module.g(k, g1[m]);
        Vec rhs = Rational(-k) * g1[k];
        rhs.axpy(m, g1[m]);
        rhs.axpy(k - m, g1[m + k]);
        expect(r, module, "[g(m),g(k)]", lhs, rhs,
               "m=" + std::to_string(m) + " k=" + std::to_string(k) + " " + on(module, b));
      }
      for (int n = -M; n <= M; ++n) {
        const Vec xn = module.x(n, v);
        Vec lhs = module.g(m, xn) - module.x(n, g1[m]);
        expect(r, module, "[g(m),x^n]", lhs, Rational(n) * xn,
               "m=" + std::to_string(m) + " n=" + std::to_string(n) + " " + on(module, b));
      }
    }
  }
  return r;
}

SuiteResult suite_gm_lemma(const BrModuleDesc& mod, const Window& w) {
  SuiteResult r = start("gm", mod.name, w);
  r.params.push_back({"rank", std::to_string(mod.rank)});
  const int M = w.modes;
  for (const Key& b : mod.carrier.basis(w.carrier)) {
    const Vec v = Vec::unit(b);
    std::map<int, Vec> g1;
    for (int s = -2 * M; s <= 2 * M; ++s) g1[s] = br_g_action(mod, s, v);
    for (int m = -M; m <= M; ++m)
      for (int k = -M; k <= M; ++k) {
        Vec lhs = br_g_action(mod, m, g1[k]) - br_g_action(mod, k, g1[m]);
        Vec rhs = Rational(-k) * g1[k];
        rhs.axpy(m, g1[m]);
        rhs.axpy(k - m, g1[m + k]);
        ++r.checks;
        if (!(lhs == rhs))
          r.failures.push_back({"[g(m),g(k)]", br_element(lhs), br_element(rhs),
                                "m=" + std::to_string(m) + " k=" + std::to_string(k) + " v=e[" +
                                    b.to_string() + "]"});
      }
  }
  return r;
}

SuiteResult suite_br_relations(const BrModuleDesc& mod, const Window& w) {
  SuiteResult r = start("relations", mod.name, w);
  r.params.push_back({"rank", std::to_string(mod.rank)});
  const BrValidation v = validate_br_module(mod, std::max(w.carrier, 1));
  r.checks = v.checks;
  for (const auto& f : v.failures) {
    r.failures.push_back({"[d_i,d_j] - (j-i) d_(i+j)", br_element(f.residual), "0",
                          "i=" + std::to_string(f.i) + " j=" + std::to_string(f.j) + " v=e[" +
                              f.basis.to_string() + "]"});
  }
  return r;
}

SuiteResult suite_prop_ff(const BrModuleDesc& m1, const BrModuleDesc& m2, const AVModulePtr& inner,
                          const Window& w) {
  const FModule nested(m1, std::make_shared<FModule>(m2, inner));
  const Flattened flat = flatten(nested);
  SuiteResult r = start("ff", nested.describe(), w);
  r.params.push_back({"flat", flat.flat->describe()});
  const int M = w.modes;
  for (const Key& b : nested.basis(caps_of(w))) {
    const Vec e = Vec::unit(b);
    const Vec fe = flat.reassociate(e);
    for (int m = -M; m <= M; ++m) {
      const std::string wit = "m=" + std::to_string(m) + " " + on(nested, b);
      expect(r, *flat.flat, "map d_m = d_m map", flat.reassociate(nested.d(m, e)), flat.flat->d(m, fe),
             wit);
      expect(r, *flat.flat, "map x^m = x^m map", flat.reassociate(nested.x(m, e)), flat.flat->x(m, fe),
             wit);
    }
    expect(r, *flat.flat, "map c = c map", flat.reassociate(nested.c(e)), flat.flat->c(fe), on(nested, b));
  }
  return r;
}

SuiteResult suite_h_identities(const Rational& lambda, const Rational& beta, const Window& w) {
  const OmegaModule omega(lambda, beta);
  SuiteResult r = start("h", omega.describe(), w);
  const int M = w.modes;
  auto check = [&](const std::string& op, const Poly& lhs, const Poly& rhs, const std::string& wit) {
    ++r.checks;
    if (!(lhs == rhs)) r.failures.push_back({op, lhs.to_string(), rhs.to_string(), wit});
  };
  for (int n = 0; n <= w.degree; ++n)
    for (int m = -M; m <= M; ++m) {
      const std::string wn = "n=" + std::to_string(n);
      const Poly diff = h_poly(m, n) - h_poly(m + 1, n);
      const Poly expect_hd = n == 0 ? Poly() : Rational(n) * h_poly(m + 1, n - 1);
      check("h_m^n - h_(m+1)^n = n h_(m+1)^(n-1)", diff, expect_hd, "m=" + std::to_string(m) + " " + wn);

      HBasisCoords unit{m, std::vector<Rational>(n + 1)};
      unit.coords[n] = 1;
      ++r.checks;
      if (!(to_h_basis(h_poly(m, n), m) == unit))
        r.failures.push_back({"to_h_basis(h_m^n) = e_n", "", "", "m=" + std::to_string(m) + " " + wn});

      for (int k = -M; k <= M; ++k) {
        const std::string wit = "m=" + std::to_string(m) + " k=" + std::to_string(k) + " " + wn;
        const Poly h = h_poly(k, n);
        const Rational lm = power(lambda, m);
        check("d_m h_k^n = lambda^m (t - m beta) h_(k+m)^n", omega_d(omega.params(), m, h),
              lm * (Poly::linear(-m * beta, 1) * h_poly(k + m, n)), wit);
        check("x^m h_k^n = lambda^m h_(k+m)^n", omega_x(omega.params(), m, h), lm * h_poly(k + m, n), wit);
      }
    }
  return r;
}

SuiteResult suite_weighting(const Rational& lambda, const Rational& beta, const Window& w,
                            const std::vector<BrModuleDesc>& carriers) {
  auto omega = std::make_shared<OmegaModule>(lambda, beta);
  const Rational target_beta = 1 - beta;
  auto a = std::make_shared<AModule>(Rational(0), target_beta);
  SuiteResult r = start("weighting", omega->describe(), w);
  r.params.push_back({"target", a->describe()});
  const int M = w.modes;

  // Omega / I_n Omega is spanned by the class of 1
  for (int n = -M; n <= M; ++n) {
    const WeightQuotient q(*omega, n);
    for (int k = 0; k <= w.degree; ++k) {
      const Poly f = Poly::monomial(1, k);
      ++r.checks;
      const Poly recomposed = q.cofactor(f) * q.generator() + Poly::constant(q(f));
      if (!(recomposed == f) || q(f) != power(Rational(n), k))
        r.failures.push_back({"t^k = n^k mod I_n", q(f).get_str(), power(Rational(n), k).get_str(),
                              "n=" + std::to_string(n) + " k=" + std::to_string(k)});
    }
    ++r.checks;
    if (q(Poly::constant(1)) == 0)
      r.failures.push_back({"v_n != 0", "0", "1", "n=" + std::to_string(n)});
  }

  for (int m = -M; m <= M; ++m)
    for (int n = -M; n <= M; ++n) {
      ++r.checks;
      const Rational got = weighted_action_omega(*omega, m, n, false);
      const Rational want = power(lambda, m) * (Rational(n) + m * (1 - beta));
      if (got != want)
        r.failures.push_back({"d_m v_n = lambda^m (n + m(1-beta)) v_(n+m)", got.get_str(), want.get_str(),
                              "m=" + std::to_string(m) + " n=" + std::to_string(n)});
    }

  auto compare = [&](const WeightTable& lhs, const WeightTable& rhs, const std::string& op,
                     const AVModule& fmt) {
    for (const auto& [idx, image] : lhs) {
      ++r.checks;
      auto it = rhs.find(idx);
      const Vec other = it == rhs.end() ? Vec{} : it->second;
      if (!(image == other)) {
        const auto& [m, n, b] = idx;
        r.failures.push_back({op, fmt.format(image), fmt.format(other),
                              "m=" + std::to_string(m) + " n=" + std::to_string(n) + " carrier=[" +
                                  b.to_string() + "]"});
      }
    }
  };
  compare(weighting_table(*omega, M, 0), weight_module_table(*a, M, 0), "W(Omega) = A(0,1-beta)", *a);

  for (const auto& mod : carriers) {
    const FModule f(mod, omega);
    const FModule fa(mod, a);
    const int cap = w.carrier;
    compare(weighting_table(f, M, cap), weight_module_table(fa, M, cap), "W(F(M,Omega)) = F(M,A(0,1-beta))",
            fa);
    // I_n (M (x) Omega) = M (x) I_n Omega: d_0 acts as 1 (x) t
    for (const Key& b : mod.carrier.basis(cap))
      for (int k = 0; k <= w.degree; ++k) {
        const Vec e = Vec::unit(Key::concat(b, Key{k}));
        expect(r, f, "d_0 (v (x) f) = v (x) t f", f.d(0, e), Vec::unit(Key::concat(b, Key{k + 1})),
               on(f, Key::concat(b, Key{k})));
      }
  }
  return r;
}

const std::vector<SweepPoint>& parameter_sweep() {
  static const std::vector<SweepPoint> points = {
      {1, 0, 0, 0},
      {1, 1, make_rational(1, 2), 1},
      {2, 2, 0, make_rational(-1, 2)},
      {make_rational(1, 3), make_rational(-1, 2), make_rational(1, 3), 2},
      {3, make_rational(1, 2), -2, make_rational(1, 3)},
      {-2, 3, make_rational(5, 2), 0},
  };
  return points;
}

std::vector<AVModulePtr> standard_fixtures(const SweepPoint& p) {
  auto omega = std::make_shared<OmegaModule>(p.lambda, p.beta);
  auto a = std::make_shared<AModule>(p.alpha, p.beta);
  const BrModuleDesc shift = make_shift_module_B1();
  return {omega, a, std::make_shared<FModule>(make_Mgamma(p.gamma, 1), omega),
          std::make_shared<FModule>(shift, omega), std::make_shared<FModule>(shift, a)};
}

std::string format_report(const SuiteResult& r) {
  std::string out = std::string(r.ok() ? "[PASS] " : "[FAIL] ") + r.suite + " " + r.module +
                    " modes=" + std::to_string(r.window.modes) + " degree=" + std::to_string(r.window.degree) +
                    " carrier=" + std::to_string(r.window.carrier);
  for (const auto& [k, v] : r.params) out += " " + k + "=" + v;
  out += " checks=" + std::to_string(r.checks);
  if (!r.ok()) out += " failures=" + std::to_string(r.failures.size());
  out += "\n";
  for (const auto& f : r.failures)
    out += "  " + f.op + " at " + f.witness + ": lhs = " + f.lhs + " ; rhs = " + f.rhs + "\n";
  return out;
}

}  // namespace virmod
