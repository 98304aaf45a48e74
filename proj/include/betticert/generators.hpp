#ifndef BETTICERT_GENERATORS_HPP
#define BETTICERT_GENERATORS_HPP

// Fixture factories: genuine data (weighted projective-space actions and
// their products), claimed models for synthetic data, and single-entry
// corruptions for negative tests.

#include "betticert/eqcalc.hpp"
#include "betticert/fixdata.hpp"

#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace betticert {

struct GeneratedSpace {
  FixedPointData data;
  CohomologyModel model;
};

/// CP^n with the circle acting with weights a_0, ..., a_n (pairwise distinct).
/// Fixed point e_i has weights {a_j - a_i : j != i} and moment a_i; R_2k is
/// spanned by the powers (a_i^e)_i, e = 0..k.
GeneratedSpace gen_cpn(const std::vector<long>& a);

/// Product action with moment H_1 + c H_2, c > 0. Points are ordered
/// left-major and named "<left id>.<right id>". Both factors must pass
/// validate_model; so must the result.
GeneratedSpace gen_product(const GeneratedSpace& left, const GeneratedSpace& right, const Rational& scale);

struct WeightChange {
  std::size_t index;
  long value;
};
struct MomentChange {
  Rational value;
};
struct Mutation {
  std::string point;  // ignored for the identity mutation
  std::variant<std::monostate, WeightChange, MomentChange> change;
};

/// Copy of `d` with one weight or one moment replaced. Throws InvalidInput
/// for an unknown point, an out-of-range weight index, or a zero weight.
FixedPointData corrupt(const FixedPointData& d, const Mutation& mutation);

/// Mutation undoing `mutation` on `d`.
Mutation inverse_mutation(const FixedPointData& d, const Mutation& mutation);

/// Data realizing a Betti profile [b_0, ..., b_2n] with +-1 weights: the
/// points are p0, p1, ... in index order, and a point of index 2i has -1 in
/// its first i weight slots. `moments` gives H in the same order.
FixedPointData synthetic_data(const BettiProfile& profile, const std::vector<Rational>& moments);

/// A model that passes validate_model_structure for any dataset. R_0 is the
/// unit; R_2k extends R_2k-2 by H^k and then by unit vectors at points of
/// index 2..2k (dataset order), then at the remaining points, keeping only
/// independent vectors until dim R_2k = b_0 + ... + b_2k.
///
/// Synthetic data is not genuine, so such a model usually fails the
/// localization checks of validate_model; it is what certify consumes.
CohomologyModel claimed_model(const FixedPointData& d);

}  // namespace betticert

#endif  // BETTICERT_GENERATORS_HPP
