#ifndef BETTICERT_EQCALC_HPP
#define BETTICERT_EQCALC_HPP

// Equivariant cohomology classes in the restriction (Kirwan) model.
//
// A pure-degree class of degree 2k is stored as its vector of restrictions
// to the fixed points: entry z is the coefficient a_z in  alpha|_z = a_z u^k.
// Restriction to the fixed set is injective, so the vector determines the
// class.

#include "betticert/exactalg.hpp"
#include "betticert/fixdata.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace betticert {

struct EquivariantClass {
  int degree = 0;  // even, 2k
  RationalVector restrictions;

  int degree_index() const { return degree / 2; }
  bool is_zero() const;
  bool operator==(const EquivariantClass& other) const;
};

/// Constant class 1 in degree 0.
EquivariantClass unit_class(const FixedPointData& d);

/// Equivariant symplectic class of the shifted moment map H - r:
/// restricts to (r - H(z)) u at every fixed point z.
EquivariantClass omega_class(const FixedPointData& d, const Rational& shift);

/// Cup product; restrictions multiply pointwise. Throws InvalidInput when the
/// vectors come from datasets of different size.
EquivariantClass multiply(const EquivariantClass& a, const EquivariantClass& b);

/// Module action of u^j: raises the degree by 2j.
EquivariantClass scale_u(const EquivariantClass& a, int power);

/// int_M alpha = scalar * u^{u_exponent}.
struct IntegrationResult {
  Rational scalar;
  int u_exponent = 0;
};

/// Localization at isolated fixed points:
///   int_M alpha = sum_z a_z / prod_i w_i(z)  times u^{k - n}.
IntegrationResult integrate(const FixedPointData& d, const EquivariantClass& a);

/// Row per target point, column per class.
RationalMatrix restriction_matrix(const FixedPointData& d, const std::vector<EquivariantClass>& basis,
                                  const std::vector<std::string>& targets);

/// Claimed bases of H^{2k}_{S^1}(M) for k = 0..n-1, keyed by k.
///
/// Nothing is stored for k >= n: there the free-module dimension reaches m and
/// injectivity makes every restriction vector a valid class.
struct CohomologyModel {
  std::map<int, std::vector<EquivariantClass>> bases;

  /// Throws PreconditionError when no basis is stored for k.
  const std::vector<EquivariantClass>& basis(int k) const;
};

/// A nonzero class of degree 2k vanishing on `targets`, built from the first
/// canonical kernel vector of the restriction matrix; nullopt when the
/// restriction to `targets` is injective.
std::optional<EquivariantClass> vanishing_class(const FixedPointData& d, const CohomologyModel& model,
                                                int k, const std::vector<std::string>& targets);

struct ModelFailure {
  // "structure", "dimension", "unit", "u-module", "moment-identity", "product"
  std::string check;
  int k = 0;
  std::string message;
  std::optional<Rational> residual;
};

struct ModelReport {
  bool pass = true;
  std::vector<ModelFailure> failures;
};

/// Structural checks only: a basis for every k in 0..n-1 with the right
/// degree and length, each basis linearly independent of dimension
/// b_0 + ... + b_2k, R_0 spanned by the unit, and R_{2k-2} inside R_{2k}.
ModelReport validate_model_structure(const FixedPointData& d, const CohomologyModel& model);

/// Structural checks, plus the localization constraints every genuine model
/// satisfies: sum_z a_z H(z)^e / prod w(z) = 0 for each basis class and
/// k + e < n, and pairwise products of degree < 2n lie in the stored span and
/// integrate to zero.
ModelReport validate_model(const FixedPointData& d, const CohomologyModel& model);

}  // namespace betticert

#endif  // BETTICERT_EQCALC_HPP
