#include "betticert/certify.hpp"

#include "betticert/errors.hpp"

#include <numeric>
#include <stdexcept>

namespace betticert {

namespace {

// Ids of points (in dataset order) whose index level i = ind/2 satisfies pred.
template <typename Pred>
std::vector<std::string> points_where(const FixedPointData& d, Pred pred) {
  std::vector<std::string> ids;
  for (const auto& p : d.points())
    if (pred(morse_index(p) / 2)) ids.push_back(p.id);
  return ids;
}

void require_palindromic(const BettiProfile& b) {
  const auto duality = poincare_duality_check(b);
  if (!duality.pass)
    throw PreconditionError("Betti profile is not palindromic: b_" + std::to_string(2 * duality.failing_pair->first) +
                            " != b_" + std::to_string(2 * duality.failing_pair->second));
}

int parity_sign(int k) { return k % 2 == 0 ? 1 : -1; }

}  // namespace

VanishingTarget build_vanishing_target(const FixedPointData& d, int k) {
  const int n = d.half_dim();
  if (k < 0 || 2 * k >= n)
    throw PreconditionError("violation degree index k = " + std::to_string(k) + " outside 0 <= 2k < n");
  const BettiProfile profile = betti_profile(d);
  require_palindromic(profile);

  // In units of index levels (ind = 2 * level):
  //   P1: level k - 2i + 1, i >= 1;  P2: level n - k + 2i, i >= 1;  P3: level n - k - 1.
  VanishingTarget t;
  t.k = k;
  t.p1 = points_where(d, [&](int level) { return level <= k - 1 && (k - 1 - level) % 2 == 0; });
  t.p2 = points_where(d, [&](int level) { return level >= n - k + 2 && (level - (n - k)) % 2 == 0; });
  t.p3 = points_where(d, [&](int level) { return level == n - k - 1; });
  t.all = t.p1;
  t.all.insert(t.all.end(), t.p2.begin(), t.p2.end());
  t.all.insert(t.all.end(), t.p3.begin(), t.p3.end());

  const auto& b = profile.values;
  const int expected = std::accumulate(b.begin(), b.begin() + k, 0) + b[static_cast<std::size_t>(k) + 1];
  if (static_cast<int>(t.all.size()) != expected)
    throw std::logic_error("vanishing target has " + std::to_string(t.all.size()) + " points, expected " +
                           std::to_string(expected));
  return t;
}

Partition partition_by_index(const FixedPointData& d, int k) {
  const int n = d.half_dim();
  if (k < 0 || 2 * k >= n)
    throw PreconditionError("violation degree index k = " + std::to_string(k) + " outside 0 <= 2k < n");
  const int count = n - 2 * k;
  if (count < 3)
    throw DegenerateCase("degenerate partition: n - 2k = " + std::to_string(count) +
                         " < 3 (n = " + std::to_string(n) + ", k = " + std::to_string(k) + ")");

  Partition part;
  part.k = k;
  part.groups.resize(static_cast<std::size_t>(count));
  for (const auto& p : d.points()) {
    const int level = morse_index(p) / 2;
    int group;  // 1-based
    if (level <= k)
      group = 1;
    else if (level <= n - k - 3)
      group = level - k + 1;
    else if (level <= n - k)
      group = count - 1;
    else
      group = count;
    part.groups[static_cast<std::size_t>(group - 1)].push_back(p.id);
  }
  return part;
}

std::vector<Rational> choose_separators(const FixedPointData& d, const Partition& part) {
  std::vector<Rational> separators;
  const std::size_t count = part.groups.size();
  for (std::size_t j = 1; j < count; ++j) {
    const FixedPoint* highest_below = nullptr;
    const FixedPoint* lowest_above = nullptr;
    for (std::size_t g = 0; g < count; ++g) {
      for (const auto& id : part.groups[g]) {
        const FixedPoint& p = d[d.position(id)];
        if (g < j) {
          if (!highest_below || highest_below->moment < p.moment) highest_below = &p;
        } else if (!lowest_above || p.moment < lowest_above->moment) {
          lowest_above = &p;
        }
      }
    }
    if (highest_below && lowest_above) {
      if (!(highest_below->moment < lowest_above->moment))
        throw NotIndexIncreasing(highest_below->id, lowest_above->id);
      separators.push_back((highest_below->moment + lowest_above->moment) / 2);
    } else if (highest_below) {
      separators.push_back(highest_below->moment + 1);
    } else if (lowest_above) {
      separators.push_back(lowest_above->moment - 1);
    } else {
      separators.push_back(Rational(0));
    }
  }
  return separators;
}

Partition separated_partition(const FixedPointData& d, int k) {
  Partition part = partition_by_index(d, k);
  part.separators = choose_separators(d, part);
  return part;
}

SignLedger sign_ledger(const FixedPointData& d, int k, const EquivariantClass& alpha, const Partition& part) {
  if (alpha.degree != 2 * k) throw PreconditionError("alpha must have degree 2k = " + std::to_string(2 * k));
  if (alpha.restrictions.size() != static_cast<Eigen::Index>(d.size()))
    throw InvalidInput("class does not match the dataset");
  if (part.k != k || part.groups.empty() || part.separators.size() + 1 != part.groups.size())
    throw PreconditionError("partition does not belong to k = " + std::to_string(k) + " or lacks separators");

  const VanishingTarget target = build_vanishing_target(d, k);
  for (const auto& id : target.all)
    if (alpha.restrictions(static_cast<Eigen::Index>(d.position(id))) != 0)
      throw PreconditionError("alpha does not vanish at target point '" + id + "'");

  EquivariantClass beta = multiply(alpha, alpha);
  for (const auto& r : part.separators) beta = multiply(beta, omega_class(d, r));

  SignLedger ledger;
  ledger.beta = beta.restrictions;
  for (const auto& group : part.groups) {
    Rational subtotal = 0;
    for (const auto& id : group) {
      const std::size_t z = d.position(id);
      subtotal += beta.restrictions(static_cast<Eigen::Index>(z)) / Rational(euler_coefficient(d[z]));
    }
    ledger.normalized_signs.push_back(parity_sign(k) * sign(subtotal));
    ledger.subtotals.push_back(std::move(subtotal));
  }

  const IntegrationResult integral = integrate(d, beta);
  ledger.total = integral.scalar;
  const Rational grouped = std::accumulate(ledger.subtotals.begin(), ledger.subtotals.end(), Rational(0));
  if (grouped != ledger.total || integral.u_exponent != -1)
    throw std::logic_error("grouped localization sum disagrees with the integral of beta");
  return ledger;
}

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::profile_unimodal: return "profile-unimodal";
    case Verdict::mechanism_verified: return "mechanism-verified";
    case Verdict::inconsistent: return "inconsistent";
  }
  return "unknown";
}

namespace {

Certificate inconsistency(const FixedPointData& d, BettiProfile profile, int k, EquivariantClass alpha,
                          VanishingTarget target) {
  Partition part = separated_partition(d, k);
  SignLedger ledger = sign_ledger(d, k, alpha, part);
  if (ledger.total == 0 || sign(ledger.total) != parity_sign(k))
    throw std::logic_error("sign ledger total does not have sign (-1)^k");

  const int n = d.half_dim();
  Certificate cert;
  cert.verdict = Verdict::inconsistent;
  cert.profile = std::move(profile);
  cert.k = k;
  cert.explanation = "int_M beta must vanish because deg beta = " + std::to_string(2 * n - 2) + " < dim M = " +
                     std::to_string(2 * n) + ", but localization gives int_M beta = " + to_string(ledger.total) +
                     " * u^-1 != 0 with beta = alpha^2 * omega(H - r_1) * ... * omega(H - r_" +
                     std::to_string(part.separators.size()) + "), alpha of degree " + std::to_string(2 * k) +
                     " vanishing on P";
  cert.alpha = std::move(alpha);
  cert.target = std::move(target);
  cert.partition = std::move(part);
  cert.ledger = std::move(ledger);
  return cert;
}

}  // namespace

Certificate certify(const FixedPointData& d, const CohomologyModel& model, const CertifyOptions& options) {
  const int n = d.half_dim();
  BettiProfile profile = betti_profile(d);
  require_palindromic(profile);
  if (const auto inc = is_index_increasing(d); !inc.pass) throw NotIndexIncreasing(inc.witness->first, inc.witness->second);
  if (const auto structure = validate_model_structure(d, model); !structure.pass)
    throw PreconditionError("cohomology model rejected: " + structure.failures.front().message);

  const auto& b = profile.values;
  for (int k = 0; 2 * k < n; ++k) {
    if (b[static_cast<std::size_t>(k)] <= b[static_cast<std::size_t>(k) + 1]) continue;
    if (n - 2 * k < 3)
      throw DegenerateCase("unimodality fails at b_" + std::to_string(2 * k) + " > b_" + std::to_string(2 * k + 2) +
                           " but n - 2k = " + std::to_string(n - 2 * k) + " < 3; this case is not supported");
    VanishingTarget target = build_vanishing_target(d, k);
    auto alpha = vanishing_class(d, model, k, target.all);
    if (!alpha) throw std::logic_error("no class vanishes on P although |P| < dim R_2k");
    return inconsistency(d, std::move(profile), k, std::move(*alpha), std::move(target));
  }

  Certificate cert;
  cert.profile = profile;
  cert.explanation = "b_2k <= b_2k+2 for every 0 <= 2k < n; with Poincare duality the even Betti profile is unimodal";
  if (!options.check_mechanism) return cert;

  bool any_checked = false;
  for (int k = 0; n - 2 * k >= 3; ++k) {
    VanishingTarget target = build_vanishing_target(d, k);
    auto alpha = vanishing_class(d, model, k, target.all);
    if (alpha) return inconsistency(d, std::move(profile), k, std::move(*alpha), std::move(target));
    any_checked = true;
  }
  if (any_checked) {
    cert.verdict = Verdict::mechanism_verified;
    cert.explanation += "; for every k with n - 2k >= 3 no nonzero class of degree 2k vanishes on P";
  }
  return cert;
}

}  // namespace betticert
