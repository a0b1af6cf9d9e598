#include "virmod/probe/closure.hpp"

#include <deque>
#include <stdexcept>

#include "virmod/av/a_module.hpp"
#include "virmod/av/h_basis.hpp"
#include "virmod/av/omega.hpp"
#include "virmod/core/interpolate.hpp"

namespace virmod {

namespace {

// Keys outside the window get tag 0 and therefore sort first; an echelon
// row whose pivot carries tag 1 lies entirely inside the window.
Vec tagged(const Vec& v, const AVModule& module, const Caps& caps) {
  Vec out;
  for (const auto& [k, c] : v) out.add(Key::concat(Key{module.in_window(k, caps) ? 1 : 0}, k), c);
  return out;
}

Vec untagged(const Vec& v) {
  Vec out;
  for (const auto& [k, c] : v) out.add(k.tail(1), c);
  return out;
}

bool inside(const Vec& row) { return !row.is_zero() && row.begin()->first[0] == 1; }

struct Run {
  SparseEchelon span;
  std::vector<Vec> window_rows;
  std::vector<std::size_t> profile;
  std::size_t iterations = 0;
  bool exhausted = false;
};

Run run_closure(const AVModule& module, const Vec& seed, const ProbeConfig& cfg, const Caps& caps) {
  Run run;
  std::deque<Vec> frontier;
  auto push = [&](const Vec& image) {
    Vec row = run.span.insert(tagged(image, module, caps));
    if (!inside(row)) return;
    Vec plain = untagged(row);
    run.window_rows.push_back(plain);
    frontier.push_back(std::move(plain));
  };
  push(seed);
  while (!frontier.empty()) {
    if (run.iterations >= cfg.max_iterations) {
      run.exhausted = true;
      break;
    }
    const Vec b = std::move(frontier.front());
    frontier.pop_front();
    ++run.iterations;
    for (int i = -cfg.modes; i <= cfg.modes; ++i) {
      const int m = cfg.descending ? -i : i;
      push(module.d(m, b));
      if (cfg.include_x) push(module.x(m, b));
    }
    run.profile.push_back(run.window_rows.size());
  }
  return run;
}

}  // namespace

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::ProperInvariantSubspaceFound:
      return "ProperInvariantSubspaceFound";
    case Verdict::FullWindowReached:
      return "FullWindowReached";
    case Verdict::Inconclusive:
      return "Inconclusive";
  }
  return "?";
}

std::string to_string(Reducibility r) {
  switch (r) {
    case Reducibility::Reducible:
      return "Reducible";
    case Reducibility::IrreducibleEvidence:
      return "IrreducibleEvidence";
    case Reducibility::Inconclusive:
      return "Inconclusive";
  }
  return "?";
}

bool ProbeResult::contains(const Vec& v) const { return window_span_.contains(v); }

ProbeResult generate(const AVModule& module, const Vec& seed, const ProbeConfig& cfg) {
  if (seed.is_zero()) throw std::invalid_argument("closure probe: seed must be nonzero");
  for (const auto& [k, c] : seed)
    if (!module.in_window(k, cfg.caps))
      throw std::invalid_argument("closure probe: seed lies outside the window");

  Run run = run_closure(module, seed, cfg, cfg.caps);
  ProbeResult out;
  out.window_dim = module.basis(cfg.caps).size();
  out.basis = run.window_rows;
  out.profile = run.profile;
  out.span_rank = run.span.rank();
  out.iterations = run.iterations;
  for (const auto& row : out.basis) out.window_span_.insert(row);

  if (run.exhausted) {
    out.verdict = Verdict::Inconclusive;
    out.note = "iteration limit reached";
    return out;
  }
  if (out.dim() == out.window_dim) {
    out.verdict = Verdict::FullWindowReached;
    return out;
  }

  // T is proper; re-check closure directly: every windowed image of T lies
  // in the generated span.
  bool closed = true;
  for (const auto& b : out.basis)
    for (int m = -cfg.modes; m <= cfg.modes && closed; ++m) {
      closed = run.span.contains(tagged(module.d(m, b), module, cfg.caps));
      if (closed && cfg.include_x) closed = run.span.contains(tagged(module.x(m, b), module, cfg.caps));
    }
  out.closure_checked = closed;
  if (!closed) {
    out.verdict = Verdict::Inconclusive;
    out.note = "closure check failed";
    return out;
  }

  if (cfg.confirm) {
    ProbeConfig bigger = cfg;
    bigger.confirm = false;
    bigger.caps = Caps{cfg.caps.inner + 1, cfg.caps.carrier + 1};
    Run wide = run_closure(module, seed, bigger, bigger.caps);
    if (wide.exhausted) {
      out.verdict = Verdict::Inconclusive;
      out.note = "iteration limit reached in the confirmation window";
      return out;
    }
    SparseEchelon retagged;
    std::size_t restricted_dim = 0;
    for (const auto& row : wide.span.rows())
      if (inside(retagged.insert(tagged(untagged(row), module, cfg.caps)))) ++restricted_dim;
    if (restricted_dim != out.dim()) {
      out.verdict = Verdict::Inconclusive;
      out.note = "window part grows from " + std::to_string(out.dim()) + " to " +
                 std::to_string(restricted_dim) + " in a larger window";
      return out;
    }
  }
  out.verdict = Verdict::ProperInvariantSubspaceFound;
  return out;
}

std::vector<Vec> default_seeds(const AVModule& module) {
  if (dynamic_cast<const OmegaModule*>(&module)) {
    return {to_vec(Poly::constant(1)), to_vec(Poly::var()), to_vec(Poly::monomial(1, 2)),
            to_vec(h_poly(0, 1)), to_vec(h_poly(0, 2))};
  }
  if (dynamic_cast<const AModule*>(&module)) {
    std::vector<Vec> out;
    for (int n = -2; n <= 2; ++n) out.push_back(Vec::unit(Key{n}));
    return out;
  }
  if (const auto* f = dynamic_cast<const FModule*>(&module)) {
    std::vector<Vec> out;
    const auto inner = default_seeds(*f->inner());
    for (const Key& b : f->br().carrier.basis(2))
      for (const Vec& w : inner) out.push_back(FModule::tensor(Vec::unit(b), w));
    return out;
  }
  throw std::invalid_argument("default_seeds: unsupported module type");
}

SweepResult sweep(const AVModule& module, const std::vector<Vec>& seeds, const ProbeConfig& cfg) {
  SweepResult out;
  bool all_full = true;
  for (const Vec& seed : seeds) {
    bool in_window = true;
    for (const auto& [k, c] : seed) in_window = in_window && module.in_window(k, cfg.caps);
    if (!in_window || seed.is_zero()) continue;
    ProbeResult r = generate(module, seed, cfg);
    if (r.verdict == Verdict::ProperInvariantSubspaceFound && !out.invariant_subspace)
      out.invariant_subspace = r.basis;
    if (r.verdict != Verdict::FullWindowReached) all_full = false;
    out.runs.push_back({seed, std::move(r)});
  }
  if (out.invariant_subspace)
    out.verdict = Reducibility::Reducible;
  else if (all_full && !out.runs.empty())
    out.verdict = Reducibility::IrreducibleEvidence;
  else
    out.verdict = Reducibility::Inconclusive;
  return out;
}

SweepResult reducibility_Mgamma(const Rational& gamma, const Rational& lambda, const Rational& beta,
                                const ProbeConfig& cfg) {
  FModule f(make_Mgamma(gamma, 1), std::make_shared<OmegaModule>(lambda, beta));
  return sweep(f, default_seeds(f), cfg);
}

Rational claim1_constant(int r) {
  Rational f = factorial(static_cast<unsigned>(r + 1));
  Rational c = 1 / (f * f);
  return (r + 1) % 2 == 0 ? c : Rational(-c);
}

namespace {

const OmegaModule& omega_inner(const FModule& f, const char* who) {
  const auto* w = dynamic_cast<const OmegaModule*>(f.inner().get());
  if (!w) throw std::invalid_argument(std::string(who) + ": inner module must be Omega(lambda, beta)");
  return *w;
}

}  // namespace

Vec claim1_extract(const FModule& f, const Vec& u, int m, const std::vector<int>& k_samples) {
  omega_inner(f, "claim1_extract");
  const int r = f.br().rank;
  const std::size_t need = static_cast<std::size_t>(2 * r + 3);
  if (k_samples.size() < need)
    throw std::invalid_argument("claim1_extract: need at least " + std::to_string(need) +
                                " sample values of k");
  std::vector<Rational> nodes;
  std::vector<Vec> values;
  for (int k : k_samples) {
    nodes.emplace_back(k);
    values.push_back(f.d(k, f.d(m - k, u)));
  }
  const auto coeffs = interpolate(nodes, values);  // rejects repeated nodes
  return coeffs[static_cast<std::size_t>(2 * r + 2)];
}

Vec claim1_target(const FModule& f, const Vec& u, int m) {
  const OmegaModule& w = omega_inner(f, "claim1_target");
  const int r = f.br().rank;
  std::vector<Vec> parts;  // parts[n] = v_n
  for (const auto& [b, inner] : f.components(u)) {
    const HBasisCoords h = to_h_basis(to_poly(inner), 0);
    if (parts.size() < h.coords.size()) parts.resize(h.coords.size());
    for (std::size_t n = 0; n < h.coords.size(); ++n) parts[n].add(b, h.coords[n]);
  }
  Vec out;
  const Rational lm = power(w.lambda(), m);
  for (std::size_t n = 0; n < parts.size(); ++n) {
    const Vec dr2 = f.br().apply(r, f.br().apply(r, parts[n]));
    out += FModule::tensor(dr2, lm * to_vec(h_poly(m, static_cast<int>(n))));
  }
  return out;
}

Claim2Result claim2_leading(const FModule& f, const std::map<int, Vec>& family, int l) {
  if (l < 0) throw std::invalid_argument("claim2_leading: l must be >= 0");
  if (family.size() < static_cast<std::size_t>(l + 1))
    throw std::invalid_argument("claim2_leading: need at least l+1 sampled values of m");
  std::vector<Rational> nodes;
  std::vector<Vec> values;
  for (const auto& [m, u] : family) {
    nodes.emplace_back(m);
    values.push_back(u);
  }
  const auto coeffs = interpolate(nodes, values);
  Claim2Result out;
  if (static_cast<std::size_t>(l) < coeffs.size()) out.element = coeffs[l];
  out.degree_bounded = true;
  for (std::size_t j = l + 1; j < coeffs.size(); ++j)
    if (!coeffs[j].is_zero()) out.degree_bounded = false;
  out.pure_constant = true;
  for (const auto& [k, c] : out.element)
    if (!(f.split(k).second == Key{0})) out.pure_constant = false;
  return out;
}

}  // namespace virmod
