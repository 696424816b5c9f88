#pragma once

// Hilbert-Poincare series of graded M-modules, the rank-one modules M eta^{2k},
// 2-dimensional indecomposables, and free-basis / growth checks.

#include "modform/vvmf.hpp"

#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace modform {

/// Integer polynomial in t, exponent -> coefficient, zeros removed.
using IntPolynomial = std::map<int, long long>;

/// numerator / ((1 - t^4)(1 - t^6))
class PoincareSeries {
 public:
  PoincareSeries() = default;
  explicit PoincareSeries(IntPolynomial numerator);

  const IntPolynomial& numerator() const { return numerator_; }
  bool operator==(const PoincareSeries&) const = default;

 private:
  IntPolynomial numerator_;
};

PoincareSeries ps_from_weights(std::span<const int> weights);

/// t^{k0}(1 - t^{2p}) / ((1-t^2)(1-t^4)(1-t^6)) on the standard denominator.
PoincareSeries ps_cyclic(int k0, int p);

/// Coefficient of t^w: sum_i c_i dim M_{w - e_i}.
long long ps_coefficient(const PoincareSeries& ps, int w);

PoincareSeries ps_difference(const PoincareSeries& a, const PoincareSeries& b);

/// Exact quotient numerator / ((1 - t^4)(1 - t^6)); throws InvalidArgument
/// when the series is not a polynomial.
IntPolynomial as_polynomial(const PoincareSeries& ps);

struct CharacterModule {
  int k0 = 0;
  /// Generator eta^{eta_exponent}, eta_exponent = 2 k0.
  unsigned eta_exponent = 0;
  PoincareSeries ps;
};

/// H(chi^{k0}) = M eta^{2 k0}, 0 <= k0 <= 11; OutOfRange otherwise.
CharacterModule character_module(int k0);

enum class TwoDimKind { Split, Cyclic };

struct TwoDimClass {
  int a = 0;  // sub-character exponent
  int b = 0;  // quotient character exponent
  TwoDimKind kind = TwoDimKind::Split;
  /// Minimal weight of H(V).
  int k0 = 0;
  std::vector<int> fundamental_weights;
  std::optional<int> coker_weight;
};

/// Throws NotIndecomposable unless a - b = +-2 (mod 12), OutOfRange unless
/// 0 <= a, b <= 11.
TwoDimClass classify_2dim(int a, int b);

/// All 24 classes, ordered by (a, b).
std::vector<TwoDimClass> enumerate_2dim();

/// PS(H(chi^a) + H(chi^b)) - PS(H(V)) as a polynomial (cyclic classes only).
IntPolynomial coker_ps_difference(const TwoDimClass& cls);

struct WeightCheck {
  int weight = 0;
  std::size_t spanning_set = 0;
  std::size_t rank = 0;
  long long expected = 0;
};

struct BasisReport {
  bool consistent = true;
  int k_max = 0;
  std::vector<int> fundamental_weights;
  std::vector<WeightCheck> weights;
  std::string summary;
};

/// Raised when the spanning set {Q^u R^v F_i} is linearly dependent.
class DependentGeneratorsError : public Error {
 public:
  DependentGeneratorsError(int weight, const std::string& message)
      : Error(ErrorCode::DependentGenerators, message), weight_(weight) {}
  int weight() const { return weight_; }

 private:
  int weight_;
};

/// Checks M-linear independence of the generators in every weight up to
/// k_max using `terms` coefficients per component. Consistency with freeness
/// up to k_max, not a proof of it.
BasisReport free_basis_verify(std::span<const VVMF> generators, int k_max, std::size_t terms);

/// max_{0 <= k <= K} |ps_coefficient(k0 + 2k) - p k / 6|
Rational growth_bound(const PoincareSeries& ps, int p, int k0, int k_limit);

/// Every component leading equals its m_j and the m_j are pairwise distinct.
bool cyclic_criterion(const VVMF& f);

}  // namespace modform
