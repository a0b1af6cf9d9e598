#include "virmod/weighting/weighting.hpp"

#include <stdexcept>

#include "virmod/av/a_module.hpp"

namespace virmod {

WeightQuotient::WeightQuotient(const OmegaModule& w, int n) : n_(n) {
  generator_ = omega_d(w.params(), 0, Poly::constant(1)) - Poly::constant(n);
  if (generator_.degree() != 1) throw std::logic_error("d_0 - n is not linear on Omega");
  root_ = -generator_.coeff(0) / generator_.coeff(1);
}

Rational WeightQuotient::operator()(const Poly& f) const {
  return f.divmod_linear(root_).second;
}

Poly WeightQuotient::cofactor(const Poly& f) const {
  Poly q = f.divmod_linear(root_).first;
  q *= 1 / generator_.coeff(1);
  return q;
}

WeightQuotient weight_quotient_omega(const OmegaModule& w, int n) { return WeightQuotient(w, n); }

Rational weighted_action_omega(const OmegaModule& w, int m, int n, bool rescaled) {
  const Poly image = omega_d(w.params(), m, Poly::constant(1));
  Rational c = WeightQuotient(w, n + m)(image);
  if (rescaled) c *= power(w.lambda(), -m);  // lambda^n / lambda^(n+m)
  return c;
}

Vec weight_F(const FModule& f, int m, int n, const Key& carrier_key) {
  const auto* w = dynamic_cast<const OmegaModule*>(f.inner().get());
  if (!w) throw std::invalid_argument("weight_F: inner module must be Omega(lambda, beta)");
  // representative of w_n = lambda^n v_n is lambda^n (e_b (x) 1)
  const Vec rep = power(w->lambda(), n) * Vec::unit(Key::concat(carrier_key, Key{0}));
  const WeightQuotient q(*w, n + m);
  const Rational to_w = power(w->lambda(), -(n + m));
  Vec out;
  for (const auto& [b, poly] : f.components(f.d(m, rep)))
    out.add(Key::concat(b, Key{n + m}), q(to_poly(poly)) * to_w);
  return out;
}

namespace {

std::vector<Key> carrier_keys(const AVModule& module, int carrier_cap) {
  if (const auto* f = dynamic_cast<const FModule*>(&module)) return f->br().carrier.basis(carrier_cap);
  return {Key{}};
}

}  // namespace

WeightTable weighting_table(const AVModule& module, int window, int carrier_cap) {
  WeightTable t;
  if (const auto* w = dynamic_cast<const OmegaModule*>(&module)) {
    for (int m = -window; m <= window; ++m)
      for (int n = -window; n <= window; ++n)
        t[{m, n, Key{}}] = Vec::unit(Key{n + m}, weighted_action_omega(*w, m, n, true));
    return t;
  }
  const auto* f = dynamic_cast<const FModule*>(&module);
  if (!f || !dynamic_cast<const OmegaModule*>(f->inner().get()))
    throw std::invalid_argument("weighting is implemented for Omega and F(M, Omega) only");
  for (const Key& b : carrier_keys(module, carrier_cap))
    for (int m = -window; m <= window; ++m)
      for (int n = -window; n <= window; ++n) t[{m, n, b}] = weight_F(*f, m, n, b);
  return t;
}

WeightTable weight_module_table(const AVModule& module, int window, int carrier_cap) {
  const AVModule* inner = &module;
  if (const auto* f = dynamic_cast<const FModule*>(&module)) inner = f->inner().get();
  if (!dynamic_cast<const AModule*>(inner))
    throw std::invalid_argument("weight_module_table: expected A(alpha, beta) or F(M, A(alpha, beta))");
  WeightTable t;
  for (const Key& b : carrier_keys(module, carrier_cap))
    for (int m = -window; m <= window; ++m)
      for (int n = -window; n <= window; ++n)
        t[{m, n, b}] = module.d(m, Vec::unit(Key::concat(b, Key{n})));
  return t;
}

std::string format_table(const WeightTable& t) {
  std::string out;
  for (const auto& [idx, image] : t) {
    const auto& [m, n, b] = idx;
    const bool plain = b.empty();
    out += "d_" + std::to_string(m) + " ";
    out += plain ? "w_" + std::to_string(n) : "v[" + b.to_string() + "] (x) w_" + std::to_string(n);
    out += " = ";
    if (image.is_zero()) {
      out += "0\n";
      continue;
    }
    bool first = true;
    for (const auto& [k, c] : image) {
      if (!first) out += " + ";
      first = false;
      const Key cb = k.slice(0, k.size() - 1);
      const int idx_n = k[k.size() - 1];
      out += c.get_str() + " ";
      out += plain ? "w_" + std::to_string(idx_n)
                   : "v[" + cb.to_string() + "] (x) w_" + std::to_string(idx_n);
    }
    out += "\n";
  }
  return out;
}

std::optional<std::tuple<int, int, Key>> first_difference(const WeightTable& a, const WeightTable& b) {
  auto ia = a.begin();
  auto ib = b.begin();
  const Vec zero;
  while (ia != a.end() || ib != b.end()) {
    if (ib == b.end() || (ia != a.end() && ia->first < ib->first)) {
      if (!ia->second.is_zero()) return ia->first;
      ++ia;
    } else if (ia == a.end() || ib->first < ia->first) {
      if (!ib->second.is_zero()) return ib->first;
      ++ib;
    } else {
      if (!(ia->second == ib->second)) return ia->first;
      ++ia;
      ++ib;
    }
  }
  return std::nullopt;
}

LambdaInvarianceReport lambda_invariance_report(const BrModuleDesc& m, const Rational& beta,
                                                const std::vector<Rational>& lambdas, int window,
                                                int carrier_cap) {
  LambdaInvarianceReport r;
  r.lambdas = lambdas;
  for (const auto& lambda : lambdas) {
    FModule f(m, std::make_shared<OmegaModule>(lambda, beta));
    r.tables.push_back(weighting_table(f, window, carrier_cap));
  }
  for (std::size_t i = 1; i < r.tables.size() && r.identical; ++i) {
    r.mismatch = first_difference(r.tables[0], r.tables[i]);
    if (r.mismatch) r.identical = false;
  }
  return r;
}

}  // namespace virmod
