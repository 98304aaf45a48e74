#include "betticert/fixdata.hpp"

#include "betticert/errors.hpp"

#include <numeric>

namespace betticert {

FixedPointData::FixedPointData(int half_dim, std::vector<FixedPoint> points)
    : half_dim_(half_dim), points_(std::move(points)) {
  if (half_dim_ < 1) throw InvalidInput("half_dim must be positive");
  if (points_.empty()) throw InvalidInput("dataset has no fixed points");
  for (std::size_t i = 0; i < points_.size(); ++i) {
    const FixedPoint& p = points_[i];
    if (!index_.emplace(p.id, i).second) throw InvalidInput("duplicate fixed point id '" + p.id + "'");
    if (p.weights.size() != static_cast<std::size_t>(half_dim_))
      throw InvalidInput("fixed point '" + p.id + "' has " + std::to_string(p.weights.size()) +
                         " weights, expected " + std::to_string(half_dim_));
    for (long w : p.weights)
      if (w == 0) throw InvalidInput("fixed point '" + p.id + "' has a zero weight (not isolated)");
  }
}

std::size_t FixedPointData::position(const std::string& id) const {
  auto it = index_.find(id);
  if (it == index_.end()) throw InvalidInput("unknown fixed point id '" + id + "'");
  return it->second;
}

int BettiProfile::total() const { return std::accumulate(values.begin(), values.end(), 0); }

int morse_index(const FixedPoint& p) {
  int negative = 0;
  for (long w : p.weights)
    if (w < 0) ++negative;
  return 2 * negative;
}

Integer euler_coefficient(const FixedPoint& p) {
  Integer product = 1;
  for (long w : p.weights) product *= w;
  return product;
}

BettiProfile betti_profile(const FixedPointData& d) {
  BettiProfile b{std::vector<int>(static_cast<std::size_t>(d.half_dim()) + 1, 0)};
  for (const auto& p : d.points()) ++b.values[static_cast<std::size_t>(morse_index(p) / 2)];
  return b;
}

DualityCheck poincare_duality_check(const BettiProfile& b) {
  const int n = b.half_dim();
  for (int i = 0; i <= n / 2; ++i)
    if (b.values[i] != b.values[n - i]) return {false, std::pair{i, n - i}};
  return {};
}

IndexIncreasingCheck is_index_increasing(const FixedPointData& d) {
  const auto& pts = d.points();
  for (const auto& p : pts) {
    for (const auto& q : pts) {
      if (morse_index(p) < morse_index(q) && !(p.moment < q.moment))
        return {false, std::pair{p.id, q.id}};
    }
  }
  return {};
}

UnimodalCheck is_unimodal(const BettiProfile& b) {
  const auto& a = b.values;
  const int len = static_cast<int>(a.size());
  for (int mode = 0; mode < len; ++mode) {
    bool ok = true;
    for (int i = 0; i + 1 < len && ok; ++i)
      ok = i < mode ? a[i] <= a[i + 1] : a[i] >= a[i + 1];
    if (ok) return {true, mode};
  }
  return {};
}

std::vector<LocalizationIdentity> LocalizationReport::failures() const {
  std::vector<LocalizationIdentity> out;
  for (const auto& id : identities)
    if (!id.holds) out.push_back(id);
  return out;
}

LocalizationReport localization_consistency(const FixedPointData& d) {
  const int n = d.half_dim();
  LocalizationReport report;
  for (int e = 0; e < n; ++e) {
    Rational sum = 0;
    for (const auto& p : d.points())
      sum += power(p.moment, static_cast<unsigned>(e)) / Rational(euler_coefficient(p));
    report.identities.push_back({LocalizationIdentity::Kind::moment_power, e, sum, sum == 0});
  }
  Rational volume = 0;
  for (const auto& p : d.points())
    volume += power(-p.moment, static_cast<unsigned>(n)) / Rational(euler_coefficient(p));
  report.identities.push_back({LocalizationIdentity::Kind::volume, n, volume, volume > 0});
  for (const auto& id : report.identities) report.pass = report.pass && id.holds;
  return report;
}

std::vector<std::string> index_level(const FixedPointData& d, int i) {
  std::vector<std::string> ids;
  for (const auto& p : d.points())
    if (morse_index(p) == 2 * i) ids.push_back(p.id);
  return ids;
}

}  // namespace betticert
