#pragma once

#include <map>
#include <memory>
#include <utility>

#include "virmod/av/av_module.hpp"
#include "virmod/br/br_module.hpp"

namespace virmod {

/// F(M, W) = M (x) W with
///   x^m (v (x) w) = v (x) x^m w
///   d_m (v (x) w) = v (x) d_m w + (g(m) v) (x) x^m w
/// where g(m) acts on M through the B_r action. A key is the carrier key
/// of M followed by the key of W, so the canonical order is carrier-major.
class FModule final : public AVModule {
 public:
  /// Throws std::invalid_argument unless `br` carries a validation
  /// certificate and `inner` is non-null.
  FModule(BrModuleDesc br, AVModulePtr inner);

  const BrModuleDesc& br() const { return br_; }
  const AVModulePtr& inner() const { return inner_; }

  Vec d(int m, const Vec& v) const override;
  Vec x(int m, const Vec& v) const override;
  std::size_t arity() const override { return br_.carrier.arity() + inner_->arity(); }
  bool in_window(const Key& k, const Caps& caps) const override;
  std::vector<Key> basis(const Caps& caps) const override;
  std::string describe() const override;
  std::string format(const Vec& v) const override;

  /// Splits a key into (carrier key, inner key).
  std::pair<Key, Key> split(const Key& k) const;
  /// Groups an element by carrier key: v = sum_b e_b (x) w_b.
  std::map<Key, Vec> components(const Vec& v) const;
  /// e (x) w for a carrier element e and an inner element w.
  static Vec tensor(const Vec& e, const Vec& w);

 private:
  BrModuleDesc br_;
  AVModulePtr inner_;
};

using FModulePtr = std::shared_ptr<const FModule>;

Vec f_d(const FModule& f, int m, const Vec& e);
Vec f_x(const FModule& f, int m, const Vec& e);
/// The central element acts as zero.
Vec f_c(const FModule& f, const Vec& e);

/// F(M1, F(M2, W)) ~ F(M1 (x) M2, W), together with the coordinate
/// re-association v1 (x) (v2 (x) w) -> (v1 (x) v2) (x) w.
struct Flattened {
  FModulePtr flat;
  std::size_t outer_arity = 0;
  std::size_t middle_arity = 0;

  Vec reassociate(const Vec& nested) const;
};

/// Throws std::invalid_argument when the inner module is not an FModule or
/// the B_r ranks differ.
Flattened flatten(const FModule& nested);

/// Closed form on F(M, A(alpha, beta)):
///   d_m (v (x) x^n) = ((n + alpha + beta m) v + g(m) v) (x) x^(n+m)
/// evaluated on the carrier basis vector `carrier_key`. Throws
/// std::invalid_argument unless the inner module is an AModule.
Vec f_weight_action(const FModule& f, int m, const Key& carrier_key, int n);

}  // namespace virmod
