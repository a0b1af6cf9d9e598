#pragma once

#include <memory>
#include <string>
#include <vector>

#include "virmod/core/sparse_vec.hpp"

namespace virmod {

/// Finite window of a module: `inner` caps the t-degree (polynomial inner
/// modules) or |n| (Laurent inner modules); `carrier` caps the x-degree of
/// polynomial B_r carrier factors.
struct Caps {
  int inner = 5;
  int carrier = 5;
};

/// An (A,V)-module: compatible actions of the Virasoro algebra (d_m, with
/// the central element acting as zero) and of the Laurent polynomials
/// (x^m). Elements are Key-indexed vectors in the module's own basis.
class AVModule {
 public:
  virtual ~AVModule() = default;

  virtual Vec d(int m, const Vec& v) const = 0;
  virtual Vec x(int m, const Vec& v) const = 0;
  Vec c(const Vec&) const { return {}; }
  /// g(m) = x^(-m) d_m, always evaluated as the composite.
  Vec g(int m, const Vec& v) const { return x(-m, d(m, v)); }

  /// Number of indices in a basis key.
  virtual std::size_t arity() const = 0;
  virtual bool in_window(const Key& k, const Caps& caps) const = 0;
  /// Window basis in canonical (lexicographic key) order.
  virtual std::vector<Key> basis(const Caps& caps) const = 0;

  /// Expression such as "F(shift,Omega(1,2))"; parseable by the CLI.
  virtual std::string describe() const = 0;
  virtual std::string format(const Vec& v) const = 0;
};

using AVModulePtr = std::shared_ptr<const AVModule>;

inline Vec g_of(const AVModule& module, int m, const Vec& v) { return module.g(m, v); }

}  // namespace virmod
