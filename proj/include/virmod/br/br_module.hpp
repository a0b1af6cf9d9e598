#pragma once

#include <cstdint>
#include <string>
#include <variant>
#include <vector>

#include "virmod/core/poly.hpp"
#include "virmod/core/rat_matrix.hpp"
#include "virmod/core/sparse_vec.hpp"

namespace virmod {

/// Largest supported rank of B_r.
inline constexpr int kMaxRank = 6;

/// One tensor factor of a carrier space: either Q^dim or Q[x] (basis x^k).
struct CarrierFactor {
  enum class Kind { FiniteDim, Polynomial };
  Kind kind = Kind::FiniteDim;
  int dim = 1;  // FiniteDim only

  static CarrierFactor finite(int dim) { return {Kind::FiniteDim, dim}; }
  static CarrierFactor polynomial() { return {Kind::Polynomial, 0}; }
  bool operator==(const CarrierFactor&) const = default;
};

/// Tensor product of factors. A basis vector is a Key with one index per
/// factor; polynomial factors are truncated to x-degree <= cap when a
/// finite window is needed.
struct Carrier {
  std::vector<CarrierFactor> factors;

  std::size_t arity() const { return factors.size(); }
  bool finite() const;
  bool contains(const Key& k, int cap) const;
  /// Window basis in lexicographic key order.
  std::vector<Key> basis(int cap) const;
  bool operator==(const Carrier&) const = default;
};

/// Linear endomorphism of a carrier, as an expression tree. Atomic nodes
/// that act on one tensor factor carry that factor's index.
class BrOperator {
 public:
  struct Zero {};
  struct Scalar {
    Rational c;
  };
  /// f(x) -> p(x) f(x) on a polynomial factor.
  struct PolyMult {
    Poly p;
    int factor = 0;
  };
  /// f(x) -> f(x + c) on a polynomial factor.
  struct UnitShift {
    Rational c;
    int factor = 0;
  };
  /// e_j -> sum_i m(i, j) e_i on a finite factor.
  struct Matrix {
    RatMatrix m;
    int factor = 0;
  };
  struct Sum {
    std::vector<BrOperator> terms;
  };
  /// chain[0] o chain[1] o ... (the last entry is applied first).
  struct Compose {
    std::vector<BrOperator> chain;
  };
  using Node = std::variant<Zero, Scalar, PolyMult, UnitShift, Matrix, Sum, Compose>;

  BrOperator() : node_(Zero{}) {}
  explicit BrOperator(Node n) : node_(std::move(n)) {}

  static BrOperator zero() { return BrOperator(Zero{}); }
  static BrOperator scalar(const Rational& c) { return BrOperator(Scalar{c}); }
  static BrOperator identity() { return scalar(1); }
  static BrOperator poly_mult(Poly p, int factor = 0) {
    return BrOperator(PolyMult{std::move(p), factor});
  }
  static BrOperator unit_shift(const Rational& c, int factor = 0) {
    return BrOperator(UnitShift{c, factor});
  }
  static BrOperator matrix(RatMatrix m, int factor = 0) {
    return BrOperator(Matrix{std::move(m), factor});
  }
  static BrOperator sum(std::vector<BrOperator> terms) { return BrOperator(Sum{std::move(terms)}); }
  static BrOperator compose(std::vector<BrOperator> chain) {
    return BrOperator(Compose{std::move(chain)});
  }

  const Node& node() const { return node_; }

  /// Applies the operator; throws std::invalid_argument when a node does
  /// not fit the carrier (wrong factor kind, matrix size, factor index).
  Vec apply(const Vec& v, const Carrier& carrier) const;

  /// Same operator with every factor index shifted by `offset`.
  BrOperator lifted(int offset) const;

  /// Throws std::invalid_argument if the tree does not fit the carrier.
  void check(const Carrier& carrier) const;

 private:
  Node node_;
};

struct Certificate {
  bool validated = false;
  int window = 0;  // polynomial-factor degree cap used for the check
};

/// A module over B_r: ops[i] realizes the image of d_i, 0 <= i <= rank.
struct BrModuleDesc {
  std::string name;
  int rank = 0;
  Carrier carrier;
  std::vector<BrOperator> ops;
  Certificate certificate;

  /// ops[i], or the zero operator when i > rank.
  const BrOperator& op(int i) const;
  Vec apply(int i, const Vec& v) const { return op(i).apply(v, carrier); }
};

/// A basis vector on which [ops[i], ops[j]] - (j - i) ops[i + j] is nonzero.
struct Residual {
  int i = 0, j = 0;
  Key basis;
  Vec residual;
};

struct BrValidation {
  int window = 0;
  std::size_t checks = 0;
  std::vector<Residual> failures;
  bool ok() const { return failures.empty(); }
};

/// Checks every bracket relation on every window basis vector.
BrValidation validate_br_module(const BrModuleDesc& m, int window);

/// Validates and returns the module with its certificate set iff the check
/// passed (otherwise the certificate is cleared).
BrModuleDesc certified(BrModuleDesc m, int window);

inline constexpr int kDefaultValidationWindow = 10;

/// One-dimensional module: d_0 acts by gamma, every d_i (i >= 1) by zero.
BrModuleDesc make_Mgamma(const Rational& gamma, int r);

/// B_1-module on Q[x]: d_0 = multiplication by -x, d_1 = f(x) -> f(x + 1).
BrModuleDesc make_shift_module_B1();

/// Deliberately invalid rank-1 description on Q^2 (d_0 = gamma, d_1 = id).
BrModuleDesc make_broken_fixture(const Rational& gamma = 1);

/// Truncated density module on span{y^0..y^top}:
/// d_i y^k = (k + a (i + 1)) y^(k+i), zero past y^top. Requires top <= r.
BrModuleDesc make_density_module(int r, int top, const Rational& a);

/// Deterministic pseudo-random finite-dimensional module of rank 1..max_rank:
/// a direct sum of density modules conjugated by a random unimodular
/// integer matrix. Always certified.
BrModuleDesc make_random_matrix_module(std::uint32_t seed, int max_rank = 3);

/// g(m) v = sum_i m^(i+1) d_i v / (i+1)!
Vec br_g_action(const BrModuleDesc& m, int mode, const Vec& v);

/// d_i acts as d_i (x) 1 + 1 (x) d_i on the concatenated carrier. Ranks
/// must agree (std::invalid_argument otherwise). The result is certified
/// on the product window.
BrModuleDesc tensor_br(const BrModuleDesc& a, const BrModuleDesc& b,
                       int window = kDefaultValidationWindow / 2);

enum class Dichotomy { Zero, InjectiveOnWindow, Mixed };

std::string to_string(Dichotomy d);

/// Classifies the action of d_r on the window: kills it, is injective on
/// it, or neither.
Dichotomy dr_dichotomy(const BrModuleDesc& m, int window);

/// Human readable description of the operator tree.
std::string describe(const BrOperator& op);

}  // namespace virmod
