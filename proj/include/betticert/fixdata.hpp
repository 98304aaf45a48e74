#ifndef BETTICERT_FIXDATA_HPP
#define BETTICERT_FIXDATA_HPP

// Fixed point data of a circle action with isolated fixed points, and the
// Morse-theoretic quantities read off from it.
//
// Index convention: ind(p) = 2 * #{negative weights at p}, i.e. the moment
// map increases along positive-weight directions.

#include "betticert/exactalg.hpp"

#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

namespace betticert {

struct FixedPoint {
  std::string id;
  std::vector<long> weights;  // tangential weights, all nonzero
  Rational moment;            // H(p)

  bool operator==(const FixedPoint&) const = default;
};

/// A validated dataset: half dimension n and a nonempty list of fixed points.
/// Point order is significant; restriction vectors are indexed by it.
class FixedPointData {
 public:
  /// Throws InvalidInput unless n >= 1, the list is nonempty, ids are
  /// distinct, and every point has exactly n nonzero weights.
  FixedPointData(int half_dim, std::vector<FixedPoint> points);

  int half_dim() const { return half_dim_; }
  std::size_t size() const { return points_.size(); }
  const std::vector<FixedPoint>& points() const { return points_; }
  const FixedPoint& operator[](std::size_t i) const { return points_[i]; }

  /// Position of `id` in point order; throws InvalidInput if unknown.
  std::size_t position(const std::string& id) const;
  bool contains(const std::string& id) const { return index_.count(id) != 0; }

  bool operator==(const FixedPointData& other) const {
    return half_dim_ == other.half_dim_ && points_ == other.points_;
  }

 private:
  int half_dim_;
  std::vector<FixedPoint> points_;
  std::unordered_map<std::string, std::size_t> index_;
};

/// [b_0, b_2, ..., b_2n]
struct BettiProfile {
  std::vector<int> values;

  int half_dim() const { return static_cast<int>(values.size()) - 1; }
  int total() const;
  bool operator==(const BettiProfile&) const = default;
};

int morse_index(const FixedPoint& p);

/// prod_i w_i(p), the coefficient of u^n in the equivariant Euler class.
Integer euler_coefficient(const FixedPoint& p);

BettiProfile betti_profile(const FixedPointData& d);

struct DualityCheck {
  bool pass = true;
  std::optional<std::pair<int, int>> failing_pair;  // (i, n - i)
};
DualityCheck poincare_duality_check(const BettiProfile& b);

struct IndexIncreasingCheck {
  bool pass = true;
  // (p, q) with ind(p) < ind(q) but H(p) >= H(q)
  std::optional<std::pair<std::string, std::string>> witness;
};
IndexIncreasingCheck is_index_increasing(const FixedPointData& d);

struct UnimodalCheck {
  bool pass = false;
  std::optional<int> mode;  // smallest mode, 0-based
};
UnimodalCheck is_unimodal(const BettiProfile& b);

/// One evaluated localization identity.
struct LocalizationIdentity {
  enum class Kind { moment_power, volume };
  Kind kind;
  int exponent;     // e for moment_power, n for volume
  Rational value;   // the exact sum
  bool holds;       // == 0 for moment_power, > 0 for volume
};

struct LocalizationReport {
  bool pass = true;
  std::vector<LocalizationIdentity> identities;  // every identity, in order
  std::vector<LocalizationIdentity> failures() const;
};

/// sum_z H(z)^e / prod_i w_i(z) for e = 0..n-1 must vanish, and
/// sum_z (-H(z))^n / prod_i w_i(z) (the symplectic volume) must be positive.
LocalizationReport localization_consistency(const FixedPointData& d);

/// Ids of all points with Morse index 2i.
std::vector<std::string> index_level(const FixedPointData& d, int i);

}  // namespace betticert

#endif  // BETTICERT_FIXDATA_HPP
