#include "virmod/f/f_module.hpp"

#include <stdexcept>

#include "virmod/av/a_module.hpp"

namespace virmod {

FModule::FModule(BrModuleDesc br, AVModulePtr inner) : br_(std::move(br)), inner_(std::move(inner)) {
  if (!inner_) throw std::invalid_argument("F(M, W): inner module missing");
  if (!br_.certificate.validated)
    throw std::invalid_argument("F(M, W): B_r module '" + br_.name + "' is not validated");
}

std::pair<Key, Key> FModule::split(const Key& k) const {
  const std::size_t a = br_.carrier.arity();
  return {k.slice(0, a), k.tail(a)};
}

std::map<Key, Vec> FModule::components(const Vec& v) const {
  std::map<Key, Vec> groups;
  for (const auto& [k, c] : v) {
    auto [b, w] = split(k);
    groups[b].add(w, c);
  }
  return groups;
}

Vec FModule::tensor(const Vec& e, const Vec& w) {
  Vec out;
  for (const auto& [b, c] : e) out.axpy_prefixed(c, b, w);
  return out;
}

Vec FModule::d(int m, const Vec& v) const {
  Vec out;
  for (const auto& [b, w] : components(v)) {
    out.axpy_prefixed(1, b, inner_->d(m, w));
    if (m == 0) continue;  // g(0) = 0
    const Vec gv = br_g_action(br_, m, Vec::unit(b));
    if (gv.is_zero()) continue;
    const Vec xw = inner_->x(m, w);
    for (const auto& [b2, c2] : gv) out.axpy_prefixed(c2, b2, xw);
  }
  return out;
}

Vec FModule::x(int m, const Vec& v) const {
  Vec out;
  for (const auto& [b, w] : components(v)) out.axpy_prefixed(1, b, inner_->x(m, w));
  return out;
}

bool FModule::in_window(const Key& k, const Caps& caps) const {
  if (k.size() != arity()) return false;
  auto [b, w] = split(k);
  return br_.carrier.contains(b, caps.carrier) && inner_->in_window(w, caps);
}

std::vector<Key> FModule::basis(const Caps& caps) const {
  std::vector<Key> out;
  const auto inner_basis = inner_->basis(caps);
  for (const Key& b : br_.carrier.basis(caps.carrier))
    for (const Key& w : inner_basis) out.push_back(Key::concat(b, w));
  return out;
}

std::string FModule::describe() const { return "F(" + br_.name + "," + inner_->describe() + ")"; }

std::string FModule::format(const Vec& v) const {
  if (v.is_zero()) return "0";
  std::string out;
  for (const auto& [b, w] : components(v)) {
    if (!out.empty()) out += " + ";
    out += "v[" + b.to_string() + "] (x) (" + inner_->format(w) + ")";
  }
  return out;
}

Vec f_d(const FModule& f, int m, const Vec& e) { return f.d(m, e); }
Vec f_x(const FModule& f, int m, const Vec& e) { return f.x(m, e); }
Vec f_c(const FModule& f, const Vec& e) { return f.c(e); }

Vec Flattened::reassociate(const Vec& nested) const {
  Vec out;
  for (const auto& [k, c] : nested) {
    const Key outer = k.slice(0, outer_arity);
    const Key middle = k.slice(outer_arity, middle_arity);
    const Key rest = k.tail(outer_arity + middle_arity);
    out.add(Key::concat(Key::concat(outer, middle), rest), c);
  }
  return out;
}

Flattened flatten(const FModule& nested) {
  const auto* inner = dynamic_cast<const FModule*>(nested.inner().get());
  if (!inner) throw std::invalid_argument("flatten: inner module is not of the form F(M2, W)");
  if (inner->br().rank != nested.br().rank)
    throw std::invalid_argument("flatten: B_r rank mismatch");
  Flattened out;
  out.flat = std::make_shared<FModule>(tensor_br(nested.br(), inner->br()), inner->inner());
  out.outer_arity = nested.br().carrier.arity();
  out.middle_arity = inner->br().carrier.arity();
  return out;
}

Vec f_weight_action(const FModule& f, int m, const Key& carrier_key, int n) {
  const auto* a = dynamic_cast<const AModule*>(f.inner().get());
  if (!a) throw std::invalid_argument("f_weight_action: inner module must be A(alpha, beta)");
  const Vec v = Vec::unit(carrier_key);
  Vec coeff = (Rational(n) + a->alpha() + a->beta() * m) * v;
  coeff += br_g_action(f.br(), m, v);
  return FModule::tensor(coeff, Vec::unit(Key{n + m}));
}

}  // namespace virmod
