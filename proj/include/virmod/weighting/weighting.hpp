#pragma once

#include <map>
#include <optional>
#include <tuple>
#include <vector>

#include "virmod/av/omega.hpp"
#include "virmod/f/f_module.hpp"

namespace virmod {

/// Quotient map Omega -> Omega / I_n Omega, where I_n is generated by
/// d_0 - n. On Omega the generator (d_0 - n) 1 is t - n, so the quotient is
/// one-dimensional, spanned by v_n = 1 + I_n Omega; the class of f is
/// (remainder of f modulo t - n) v_n.
class WeightQuotient {
 public:
  WeightQuotient(const OmegaModule& w, int n);

  int weight() const { return n_; }
  /// t - n, obtained as (d_0 - n) applied to 1.
  const Poly& generator() const { return generator_; }
  /// Coefficient of v_n in the class of f.
  Rational operator()(const Poly& f) const;
  /// Quotient q with f = q * generator + (*this)(f).
  Poly cofactor(const Poly& f) const;

 private:
  int n_;
  Poly generator_;
  Rational root_;
};

WeightQuotient weight_quotient_omega(const OmegaModule& w, int n);

/// Coefficient c with d_m v_n = c v_(n+m) on the weighting of Omega(lambda, beta),
/// computed from class representatives. With `rescaled`, the basis is
/// w_n = lambda^n v_n instead.
Rational weighted_action_omega(const OmegaModule& w, int m, int n, bool rescaled = false);

/// d_m (e_b (x) w_n) in the weighting of F(M, Omega(lambda, beta)), rescaled
/// by w_n = lambda^n v_n, in F(M, A(0, 1 - beta)) coordinates (carrier key
/// followed by {n + m}). Throws std::invalid_argument unless the inner
/// module is an OmegaModule.
Vec weight_F(const FModule& f, int m, int n, const Key& carrier_key);

/// Action table keyed by (m, n, carrier key); an empty carrier key stands
/// for a module without B_r factor.
using WeightTable = std::map<std::tuple<int, int, Key>, Vec>;

/// Rescaled weighting table for Omega(lambda, beta) or F(M, Omega(lambda, beta)),
/// |m|, |n| <= window, carrier keys within carrier_cap.
WeightTable weighting_table(const AVModule& module, int window, int carrier_cap);

/// Direct action table of a weight module A(alpha, beta) or F(M, A(alpha, beta))
/// on the same index set, for comparison with weighting_table.
WeightTable weight_module_table(const AVModule& module, int window, int carrier_cap);

/// One line per entry: "d_m w_n = c w_(n+m)" or, with a carrier,
/// "d_m v[b] (x) w_n = c v[b'] (x) w_k + ...".
std::string format_table(const WeightTable& t);

/// First entry at which two tables differ (missing entries count as zero).
std::optional<std::tuple<int, int, Key>> first_difference(const WeightTable& a, const WeightTable& b);

struct LambdaInvarianceReport {
  std::vector<Rational> lambdas;
  std::vector<WeightTable> tables;
  bool identical = true;
  std::optional<std::tuple<int, int, Key>> mismatch;
};

/// Rescaled weighting tables of F(M, Omega(lambda, beta)) for each lambda.
LambdaInvarianceReport lambda_invariance_report(const BrModuleDesc& m, const Rational& beta,
                                                const std::vector<Rational>& lambdas, int window,
                                                int carrier_cap = 3);

}  // namespace virmod
