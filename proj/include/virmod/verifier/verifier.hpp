#pragma once

#include <string>
#include <utility>
#include <vector>

#include "virmod/av/av_module.hpp"
#include "virmod/br/br_module.hpp"

namespace virmod {

/// Mode range |i|, |j|, |m|, |k| <= modes; inner basis degree (and |n| for
/// Laurent modules) <= degree; carrier degree <= carrier.
struct Window {
  int modes = 4;
  int degree = 5;
  int carrier = 5;
};

struct Failure {
  std::string op;
  std::string lhs;
  std::string rhs;
  std::string witness;
};

struct SuiteResult {
  std::string suite;
  std::string module;
  Window window;
  std::vector<std::pair<std::string, std::string>> params;
  std::size_t checks = 0;
  std::vector<Failure> failures;

  bool ok() const { return failures.empty(); }
};

/// d_i d_j v - d_j d_i v = (j - i) d_(i+j) v + delta_(i,-j) (i^3 - i)/12 c v, c acting as 0.
SuiteResult suite_virasoro_bracket(const AVModule& module, const Window& w = {});

/// m x^(n+m) v = d_n x^m v - x^m d_n v, and c v = 0.
SuiteResult suite_av_compat(const AVModule& module, const Window& w = {});

/// The g(m) = x^(-m) d_m relations (commutator of g's, commutator with x^n)
/// and d_m = x^m g(m).
SuiteResult suite_g(const AVModule& module, const Window& w = {});

/// The polynomial action g(m) of a B_r-module satisfies the g-bracket.
SuiteResult suite_gm_lemma(const BrModuleDesc& m, const Window& w = {});

/// Defining relations of a B_r-module description on the carrier window.
SuiteResult suite_br_relations(const BrModuleDesc& m, const Window& w = {});

/// F(M1, F(M2, W)) and F(M1 (x) M2, W) are intertwined by re-association.
SuiteResult suite_prop_ff(const BrModuleDesc& m1, const BrModuleDesc& m2, const AVModulePtr& inner,
                          const Window& w = {});

/// Difference and shift identities of the h_m^n basis on Omega(lambda, beta).
SuiteResult suite_h_identities(const Rational& lambda, const Rational& beta, const Window& w = {});

/// Weighting of Omega(lambda, beta) against A(0, 1 - beta), and of
/// F(M, Omega(lambda, beta)) against F(M, A(0, 1 - beta)) for each carrier M.
SuiteResult suite_weighting(const Rational& lambda, const Rational& beta, const Window& w = {},
                            const std::vector<BrModuleDesc>& carriers = {});

/// One parameter tuple of the fixed sweep.
struct SweepPoint {
  Rational lambda, beta, alpha, gamma;
};

/// Six fixed tuples, including the boundary values beta = 0 and beta = 1.
const std::vector<SweepPoint>& parameter_sweep();

/// Omega(l,b), A(a,b), F(M_gamma, Omega(l,b)), F(shift, Omega(l,b)), F(shift, A(a,b)).
std::vector<AVModulePtr> standard_fixtures(const SweepPoint& p);

/// "[PASS] suite module window=... checks=N" plus one line per failure.
std::string format_report(const SuiteResult& r);

}  // namespace virmod
