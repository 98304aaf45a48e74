#ifndef BETTICERT_CERTIFY_HPP
#define BETTICERT_CERTIFY_HPP

// The unimodality argument for index-increasing moment maps, run on data.
//
// Suppose b_2k > b_2k+2 with 0 <= 2k < n. A vanishing target P of size
// b_0 + ... + b_2k-2 + b_2k+2 is built from index levels; since that is
// smaller than dim R_2k there is a nonzero class alpha of degree 2k vanishing
// on P. The fixed points are split into n - 2k index groups separated by
// moment values r_1 < ... < r_{n-2k-1}, and
//
//     beta = alpha^2 * omega(H - r_1) * ... * omega(H - r_{n-2k-1})
//
// has degree 2n - 2, so its integral must vanish. Every group subtotal of the
// localization sum has sign (-1)^k, and some subtotal is nonzero, so the
// integral does not vanish: the data cannot come from a genuine action.

#include "betticert/eqcalc.hpp"
#include "betticert/fixdata.hpp"

#include <optional>
#include <string>
#include <vector>

namespace betticert {

struct VanishingTarget {
  int k = 0;
  std::vector<std::string> p1;   // levels 2k - 4i + 2, i >= 1
  std::vector<std::string> p2;   // levels 2n - 2k + 4i, i >= 1
  std::vector<std::string> p3;   // level 2n - 2k - 2
  std::vector<std::string> all;  // p1, p2, p3 concatenated
};

/// Requires 0 <= 2k < n and a palindromic Betti profile; throws
/// PreconditionError otherwise.
VanishingTarget build_vanishing_target(const FixedPointData& d, int k);

struct Partition {
  int k = 0;
  std::vector<std::vector<std::string>> groups;  // I_1 .. I_{n-2k}
  std::vector<Rational> separators;              // r_1 .. r_{n-2k-1}
};

/// Index groups only (separators left empty):
///   I_1 = levels 0..2k, I_j = level 2k+2j-2 for 2 <= j <= n-2k-2,
///   I_{n-2k-1} = levels 2n-2k-4 .. 2n-2k, I_{n-2k} = levels 2n-2k+2 .. 2n.
/// Throws DegenerateCase when n - 2k < 3.
Partition partition_by_index(const FixedPointData& d, int k);

/// r_j is the midpoint between the largest moment in I_1 u ... u I_j and the
/// smallest in I_{j+1} u ... u I_{n-2k}. Throws NotIndexIncreasing when the
/// two ranges overlap.
std::vector<Rational> choose_separators(const FixedPointData& d, const Partition& part);

/// partition_by_index followed by choose_separators.
Partition separated_partition(const FixedPointData& d, int k);

struct SignLedger {
  RationalVector beta;               // restrictions of beta, coefficient of u^{2n-2}
  std::vector<Rational> subtotals;   // S_j
  std::vector<int> normalized_signs; // sign((-1)^k S_j)
  Rational total;                    // sum_j S_j, the coefficient of u^-1 in int beta
};

/// Builds beta and its grouped localization sum. `alpha` must have degree 2k
/// and vanish on the vanishing target for k; otherwise PreconditionError.
SignLedger sign_ledger(const FixedPointData& d, int k, const EquivariantClass& alpha, const Partition& part);

enum class Verdict { profile_unimodal, mechanism_verified, inconsistent };

std::string to_string(Verdict v);

struct Certificate {
  Verdict verdict = Verdict::profile_unimodal;
  BettiProfile profile;
  std::optional<int> k;
  std::optional<EquivariantClass> alpha;
  std::optional<VanishingTarget> target;
  std::optional<Partition> partition;
  std::optional<SignLedger> ledger;
  std::string explanation;
};

struct CertifyOptions {
  // When the profile is unimodal, also run the argument for every k with
  // n - 2k >= 3: a nonzero class vanishing on P is itself a certificate of
  // inconsistency, and its absence at every k is reported as
  // mechanism-verified.
  bool check_mechanism = false;
};

/// Requires an index-increasing dataset with a palindromic profile and a
/// structurally valid model. Violations are scanned in ascending k and the
/// smallest one is reported; a violation with n - 2k < 3 raises
/// DegenerateCase.
Certificate certify(const FixedPointData& d, const CohomologyModel& model, const CertifyOptions& options = {});

}  // namespace betticert

#endif  // BETTICERT_CERTIFY_HPP
