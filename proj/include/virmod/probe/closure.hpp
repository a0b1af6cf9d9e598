#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "virmod/av/av_module.hpp"
#include "virmod/core/echelon.hpp"
#include "virmod/f/f_module.hpp"

namespace virmod {

/// Window of a closure run. Operators d_m (and x^m when include_x) are
/// applied for |m| <= modes to every element of the running span that lies
/// inside `caps`; images are inserted exactly, never truncated.
struct ProbeConfig {
  int modes = 4;
  Caps caps{6, 4};
  std::size_t max_iterations = 100000;
  bool include_x = false;
  /// Re-run one step larger before reporting a proper subspace.
  bool confirm = true;
  /// Visit modes from +modes down to -modes.
  bool descending = false;
};

enum class Verdict { ProperInvariantSubspaceFound, FullWindowReached, Inconclusive };

std::string to_string(Verdict v);

struct ProbeResult {
  Verdict verdict = Verdict::Inconclusive;
  /// Echelon basis of T = (generated span) intersected with the window.
  std::vector<Vec> basis;
  std::size_t window_dim = 0;
  /// dim T after each expanded frontier element.
  std::vector<std::size_t> profile;
  /// Rank of the full generated span, including images past the window.
  std::size_t span_rank = 0;
  std::size_t iterations = 0;
  /// Every windowed operator maps T into the generated span (checked exactly).
  bool closure_checked = false;
  std::string note;

  std::size_t dim() const { return basis.size(); }
  /// Membership of a window element in T.
  bool contains(const Vec& v) const;

 private:
  friend ProbeResult generate(const AVModule&, const Vec&, const ProbeConfig&);
  SparseEchelon window_span_;
};

/// Truncated submodule generation from `seed`. Throws std::invalid_argument
/// for a zero seed or a seed outside the window.
ProbeResult generate(const AVModule& module, const Vec& seed, const ProbeConfig& cfg);

enum class Reducibility { Reducible, IrreducibleEvidence, Inconclusive };

std::string to_string(Reducibility r);

struct SweepRun {
  Vec seed;
  ProbeResult result;
};

struct SweepResult {
  Reducibility verdict = Reducibility::Inconclusive;
  std::vector<SweepRun> runs;
  /// Basis of the first proper invariant subspace found.
  std::optional<std::vector<Vec>> invariant_subspace;
};

/// Seeds tried by default: carrier basis vectors with indices <= 2 tensored
/// with 1, t, t^2, h_0^1, h_0^2 (polynomial inner modules) or x^n, |n| <= 2
/// (Laurent inner modules).
std::vector<Vec> default_seeds(const AVModule& module);

/// Reducible iff some seed yields a proper invariant subspace;
/// IrreducibleEvidence iff every seed reaches the full window.
SweepResult sweep(const AVModule& module, const std::vector<Vec>& seeds, const ProbeConfig& cfg);

/// Finite-dimensional case of the reducibility criterion for F(M_gamma, Omega(lambda, beta)).
SweepResult reducibility_Mgamma(const Rational& gamma, const Rational& lambda, const Rational& beta,
                                const ProbeConfig& cfg);

/// Leading-order constant relating the k^(2r+2) coefficient of d_k d_(m-k) u
/// to the target element of claim1_target: (-1)^(r+1) / ((r+1)!)^2.
Rational claim1_constant(int r);

/// Coefficient of k^(2r+2) in d_k d_(m-k) u, by exact interpolation over
/// k_samples (at least 2r+3 distinct integers, else std::invalid_argument).
/// Requires F = F(M, Omega(lambda, beta)).
Vec claim1_extract(const FModule& f, const Vec& u, int m, const std::vector<int>& k_samples);

/// lambda^m sum_n (d_r^2 v_n) (x) h_m^n, where u = sum_n v_n (x) h_0^n.
Vec claim1_target(const FModule& f, const Vec& u, int m);

struct Claim2Result {
  Vec element;
  /// Every term has inner part t^0, i.e. element = w (x) 1.
  bool pure_constant = false;
  /// Coefficients of m^j, j > l, vanish on the sampled family.
  bool degree_bounded = false;
};

/// Coefficient of m^l in the family m -> u(m), interpolated over the keys of
/// `family` (at least l+1 of them, else std::invalid_argument).
Claim2Result claim2_leading(const FModule& f, const std::map<int, Vec>& family, int l);

}  // namespace virmod
