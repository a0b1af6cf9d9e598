#include "virmod/br/br_module.hpp"

#include <random>
#include <sstream>
#include <stdexcept>

#include "virmod/core/echelon.hpp"

namespace virmod {

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

void require_factor(const Carrier& carrier, int factor, CarrierFactor::Kind kind,
                    const char* what) {
  if (factor < 0 || static_cast<std::size_t>(factor) >= carrier.arity())
    throw std::invalid_argument(std::string(what) + ": factor index " + std::to_string(factor) +
                                " out of range");
  if (carrier.factors[factor].kind != kind)
    throw std::invalid_argument(std::string(what) + ": factor " + std::to_string(factor) +
                                " has the wrong kind");
}

}  // namespace

bool Carrier::finite() const {
  for (const auto& f : factors)
    if (f.kind == CarrierFactor::Kind::Polynomial) return false;
  return true;
}

bool Carrier::contains(const Key& k, int cap) const {
  if (k.size() != arity()) return false;
  for (std::size_t i = 0; i < arity(); ++i) {
    if (k[i] < 0) return false;
    const auto& f = factors[i];
    if (f.kind == CarrierFactor::Kind::FiniteDim ? k[i] >= f.dim : k[i] > cap) return false;
  }
  return true;
}

std::vector<Key> Carrier::basis(int cap) const {
  std::vector<Key> out{Key{}};
  for (const auto& f : factors) {
    const int n = f.kind == CarrierFactor::Kind::FiniteDim ? f.dim : cap + 1;
    std::vector<Key> next;
    next.reserve(out.size() * static_cast<std::size_t>(std::max(n, 0)));
    for (const auto& k : out)
      for (int i = 0; i < n; ++i) {
        Key e = k;
        e.push_back(i);
        next.push_back(e);
      }
    out = std::move(next);
  }
  return out;
}

Vec BrOperator::apply(const Vec& v, const Carrier& carrier) const {
  return std::visit(
      overloaded{
          [&](const Zero&) { return Vec{}; },
          [&](const Scalar& s) { return s.c * v; },
          [&](const PolyMult& p) {
            require_factor(carrier, p.factor, CarrierFactor::Kind::Polynomial, "polymult");
            Vec out;
            for (const auto& [k, c] : v) {
              for (std::size_t j = 0; j < p.p.coeffs().size(); ++j) {
                if (p.p.coeffs()[j] == 0) continue;
                Key e = k;
                e[p.factor] += static_cast<int>(j);
                out.add(e, c * p.p.coeffs()[j]);
              }
            }
            return out;
          },
          [&](const UnitShift& s) {
            require_factor(carrier, s.factor, CarrierFactor::Kind::Polynomial, "shift");
            Vec out;
            for (const auto& [k, c] : v) {
              // x^n -> (x + c)^n = sum_j C(n, j) c^(n-j) x^j
              const int n = k[s.factor];
              Rational cp = 1;
              for (int j = n; j >= 0; --j) {
                Key e = k;
                e[s.factor] = j;
                out.add(e, c * binomial(n, j) * cp);
                cp *= s.c;
              }
            }
            return out;
          },
          [&](const Matrix& m) {
            require_factor(carrier, m.factor, CarrierFactor::Kind::FiniteDim, "matrix");
            const int dim = carrier.factors[m.factor].dim;
            if (m.m.rows() != static_cast<std::size_t>(dim) ||
                m.m.cols() != static_cast<std::size_t>(dim))
              throw std::invalid_argument("matrix: size does not match the carrier factor");
            Vec out;
            for (const auto& [k, c] : v) {
              const int j = k[m.factor];
              for (int i = 0; i < dim; ++i) {
                if (m.m(i, j) == 0) continue;
                Key e = k;
                e[m.factor] = i;
                out.add(e, c * m.m(i, j));
              }
            }
            return out;
          },
          [&](const Sum& s) {
            Vec out;
            for (const auto& t : s.terms) out += t.apply(v, carrier);
            return out;
          },
          [&](const Compose& c) {
            Vec out = v;
            for (auto it = c.chain.rbegin(); it != c.chain.rend(); ++it) out = it->apply(out, carrier);
            return out;
          },
      },
      node_);
}

BrOperator BrOperator::lifted(int offset) const {
  return std::visit(
      overloaded{
          [&](const Zero& z) { return BrOperator(z); },
          [&](const Scalar& s) { return BrOperator(s); },
          [&](const PolyMult& p) { return poly_mult(p.p, p.factor + offset); },
          [&](const UnitShift& s) { return unit_shift(s.c, s.factor + offset); },
          [&](const Matrix& m) { return matrix(m.m, m.factor + offset); },
          [&](const Sum& s) {
            std::vector<BrOperator> t;
            for (const auto& x : s.terms) t.push_back(x.lifted(offset));
            return sum(std::move(t));
          },
          [&](const Compose& c) {
            std::vector<BrOperator> t;
            for (const auto& x : c.chain) t.push_back(x.lifted(offset));
            return compose(std::move(t));
          },
      },
      node_);
}

void BrOperator::check(const Carrier& carrier) const {
  std::visit(overloaded{
                 [&](const Zero&) {},
                 [&](const Scalar&) {},
                 [&](const PolyMult& p) {
                   require_factor(carrier, p.factor, CarrierFactor::Kind::Polynomial, "polymult");
                 },
                 [&](const UnitShift& s) {
                   require_factor(carrier, s.factor, CarrierFactor::Kind::Polynomial, "shift");
                 },
                 [&](const Matrix& m) {
                   require_factor(carrier, m.factor, CarrierFactor::Kind::FiniteDim, "matrix");
                   const auto dim = static_cast<std::size_t>(carrier.factors[m.factor].dim);
                   if (m.m.rows() != dim || m.m.cols() != dim)
                     throw std::invalid_argument("matrix: size does not match the carrier factor");
                 },
                 [&](const Sum& s) {
                   for (const auto& t : s.terms) t.check(carrier);
                 },
                 [&](const Compose& c) {
                   for (const auto& t : c.chain) t.check(carrier);
                 },
             },
             node_);
}

std::string describe(const BrOperator& op) {
  return std::visit(
      overloaded{
          [](const BrOperator::Zero&) { return std::string("0"); },
          [](const BrOperator::Scalar& s) { return s.c.get_str(); },
          [](const BrOperator::PolyMult& p) {
            return "(" + p.p.to_string('x') + ")*[" + std::to_string(p.factor) + "]";
          },
          [](const BrOperator::UnitShift& s) {
            return "shift(" + s.c.get_str() + ")[" + std::to_string(s.factor) + "]";
          },
          [](const BrOperator::Matrix& m) {
            std::ostringstream os;
            os << "matrix" << m.m.rows() << "x" << m.m.cols() << "[" << m.factor << "]";
            return os.str();
          },
          [](const BrOperator::Sum& s) {
            std::string out = "sum(";
            for (std::size_t i = 0; i < s.terms.size(); ++i)
              out += (i ? ", " : "") + describe(s.terms[i]);
            return out + ")";
          },
          [](const BrOperator::Compose& c) {
            std::string out = "compose(";
            for (std::size_t i = 0; i < c.chain.size(); ++i)
              out += (i ? ", " : "") + describe(c.chain[i]);
            return out + ")";
          },
      },
      op.node());
}

const BrOperator& BrModuleDesc::op(int i) const {
  static const BrOperator kZero;
  if (i < 0 || i > rank || static_cast<std::size_t>(i) >= ops.size()) return kZero;
  return ops[i];
}

BrValidation validate_br_module(const BrModuleDesc& m, int window) {
  if (window < 1) throw std::invalid_argument("validate_br_module: window must be >= 1");
  if (m.rank < 0 || m.rank > kMaxRank)
    throw std::invalid_argument("rank must lie in [0, " + std::to_string(kMaxRank) + "]");
  if (m.ops.size() != static_cast<std::size_t>(m.rank + 1))
    throw std::invalid_argument("module of rank r needs exactly r+1 operators");
  for (const auto& op : m.ops) op.check(m.carrier);

  BrValidation report;
  report.window = window;
  for (const Key& b : m.carrier.basis(window)) {
    const Vec v = Vec::unit(b);
    std::vector<Vec> images;
    for (int i = 0; i <= m.rank; ++i) images.push_back(m.apply(i, v));
    for (int i = 0; i <= m.rank; ++i)
      for (int j = 0; j <= m.rank; ++j) {
        Vec res = m.apply(i, images[j]) - m.apply(j, images[i]);
        res.axpy(Rational(-(j - i)), m.apply(i + j, v));
        ++report.checks;
        if (!res.is_zero()) report.failures.push_back({i, j, b, std::move(res)});
      }
  }
  return report;
}

BrModuleDesc certified(BrModuleDesc m, int window) {
  const bool ok = validate_br_module(m, window).ok();
  m.certificate = ok ? Certificate{true, window} : Certificate{};
  return m;
}

BrModuleDesc make_Mgamma(const Rational& gamma, int r) {
  if (r < 0 || r > kMaxRank) throw std::invalid_argument("make_Mgamma: rank out of range");
  BrModuleDesc m;
  m.name = r == 1 ? "Mgamma(" + gamma.get_str() + ")"
                  : "Mgamma(" + gamma.get_str() + "," + std::to_string(r) + ")";
  m.rank = r;
  m.carrier.factors = {CarrierFactor::finite(1)};
  m.ops.push_back(BrOperator::scalar(gamma));
  for (int i = 1; i <= r; ++i) m.ops.push_back(BrOperator::zero());
  return certified(std::move(m), 1);
}

BrModuleDesc make_shift_module_B1() {
  BrModuleDesc m;
  m.name = "shift";
  m.rank = 1;
  m.carrier.factors = {CarrierFactor::polynomial()};
  m.ops = {BrOperator::poly_mult(Poly::linear(0, -1)), BrOperator::unit_shift(1)};
  return certified(std::move(m), kDefaultValidationWindow);
}

BrModuleDesc make_broken_fixture(const Rational& gamma) {
  BrModuleDesc m;
  m.name = "broken_fixture";
  m.rank = 1;
  m.carrier.factors = {CarrierFactor::finite(2)};
  m.ops = {BrOperator::scalar(gamma), BrOperator::identity()};
  return certified(std::move(m), 1);
}

namespace {

std::vector<RatMatrix> density_blocks(int r, int top, const Rational& a) {
  std::vector<RatMatrix> ops;
  const auto n = static_cast<std::size_t>(top + 1);
  for (int i = 0; i <= r; ++i) {
    RatMatrix d(n, n);
    for (int k = 0; k + i <= top; ++k) d(k + i, k) = Rational(k) + a * (i + 1);
    ops.push_back(std::move(d));
  }
  return ops;
}

RatMatrix block_diag(const RatMatrix& a, const RatMatrix& b) {
  RatMatrix out(a.rows() + b.rows(), a.cols() + b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) = a(i, j);
  for (std::size_t i = 0; i < b.rows(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j) out(a.rows() + i, a.cols() + j) = b(i, j);
  return out;
}

}  // namespace

BrModuleDesc make_density_module(int r, int top, const Rational& a) {
  if (r < 0 || r > kMaxRank) throw std::invalid_argument("make_density_module: rank out of range");
  if (top < 0 || top > r) throw std::invalid_argument("make_density_module: need 0 <= top <= r");
  BrModuleDesc m;
  m.name = "density(" + std::to_string(r) + "," + std::to_string(top) + "," + a.get_str() + ")";
  m.rank = r;
  m.carrier.factors = {CarrierFactor::finite(top + 1)};
  for (auto& d : density_blocks(r, top, a)) m.ops.push_back(BrOperator::matrix(std::move(d)));
  return certified(std::move(m), 1);
}

BrModuleDesc make_random_matrix_module(std::uint32_t seed, int max_rank) {
  if (max_rank < 1 || max_rank > kMaxRank)
    throw std::invalid_argument("make_random_matrix_module: max_rank out of range");
  std::mt19937 rng(seed);
  auto pick = [&](int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); };
  auto small_rational = [&] { return make_rational(pick(-3, 3), pick(1, 3)); };

  const int r = pick(1, max_rank);
  std::vector<RatMatrix> ops = density_blocks(r, pick(0, r), small_rational());
  if (pick(0, 1)) {
    auto extra = density_blocks(r, pick(0, r), small_rational());
    for (int i = 0; i <= r; ++i) ops[i] = block_diag(ops[i], extra[i]);
  }
  const std::size_t n = ops[0].rows();

  // unimodular change of basis built from elementary row operations
  RatMatrix p = RatMatrix::identity(n);
  if (n > 1) {
    for (std::size_t step = 0; step < 2 * n; ++step) {
      auto i = static_cast<std::size_t>(pick(0, static_cast<int>(n) - 1));
      auto j = static_cast<std::size_t>(pick(0, static_cast<int>(n) - 2));
      if (j >= i) ++j;
      const Rational f = pick(-2, 2);
      for (std::size_t c = 0; c < n; ++c) p(i, c) += f * p(j, c);
    }
  }
  const RatMatrix p_inv = *inverse(p);

  BrModuleDesc m;
  m.name = "random(" + std::to_string(seed) + ")";
  m.rank = r;
  m.carrier.factors = {CarrierFactor::finite(static_cast<int>(n))};
  for (const auto& d : ops) m.ops.push_back(BrOperator::matrix(p * d * p_inv));
  return certified(std::move(m), 1);
}

Vec br_g_action(const BrModuleDesc& m, int mode, const Vec& v) {
  Vec out;
  if (mode == 0) return out;
  Rational mp = mode;  // m^(i+1)
  for (int i = 0; i <= m.rank; ++i) {
    out.axpy(mp / factorial(static_cast<unsigned>(i + 1)), m.apply(i, v));
    mp *= mode;
  }
  return out;
}

BrModuleDesc tensor_br(const BrModuleDesc& a, const BrModuleDesc& b, int window) {
  if (a.rank != b.rank)
    throw std::invalid_argument("tensor_br: rank mismatch (" + std::to_string(a.rank) + " vs " +
                                std::to_string(b.rank) + ")");
  if (!a.certificate.validated || !b.certificate.validated)
    throw std::invalid_argument("tensor_br: both factors must be validated");
  BrModuleDesc t;
  t.name = "tensor(" + a.name + "," + b.name + ")";
  t.rank = a.rank;
  t.carrier.factors = a.carrier.factors;
  t.carrier.factors.insert(t.carrier.factors.end(), b.carrier.factors.begin(),
                           b.carrier.factors.end());
  const int offset = static_cast<int>(a.carrier.arity());
  for (int i = 0; i <= t.rank; ++i)
    t.ops.push_back(BrOperator::sum({a.ops[i], b.ops[i].lifted(offset)}));
  return certified(std::move(t), window);
}

std::string to_string(Dichotomy d) {
  switch (d) {
    case Dichotomy::Zero:
      return "Zero";
    case Dichotomy::InjectiveOnWindow:
      return "InjectiveOnWindow";
    case Dichotomy::Mixed:
      return "Mixed";
  }
  return "?";
}

Dichotomy dr_dichotomy(const BrModuleDesc& m, int window) {
  const auto basis = m.carrier.basis(window);
  SparseEchelon images;
  bool all_zero = true;
  for (const Key& b : basis) {
    Vec img = m.apply(m.rank, Vec::unit(b));
    if (!img.is_zero()) all_zero = false;
    images.insert(img);
  }
  if (all_zero) return Dichotomy::Zero;
  return images.rank() == basis.size() ? Dichotomy::InjectiveOnWindow : Dichotomy::Mixed;
}

}  // namespace virmod
