#include "betticert/generators.hpp"

#include "betticert/errors.hpp"

#include <set>

namespace betticert {

namespace {

// Nonzero rows of the reduced row echelon form of the stacked vectors.
std::vector<RationalVector> reduced_basis(const std::vector<RationalVector>& vectors, Eigen::Index length) {
  RationalMatrix stacked(static_cast<Eigen::Index>(vectors.size()), length);
  for (std::size_t i = 0; i < vectors.size(); ++i) stacked.row(static_cast<Eigen::Index>(i)) = vectors[i].transpose();
  const auto echelon = row_echelon(stacked);
  std::vector<RationalVector> basis;
  for (std::size_t i = 0; i < echelon.pivots.size(); ++i)
    basis.push_back(echelon.reduced.row(static_cast<Eigen::Index>(i)).transpose());
  return basis;
}

// Restriction vectors spanning degree 2k of a validated model; the whole
// space once k reaches n.
std::vector<RationalVector> degree_space(const GeneratedSpace& s, int k) {
  const auto m = static_cast<Eigen::Index>(s.data.size());
  std::vector<RationalVector> out;
  if (k >= s.data.half_dim()) {
    for (Eigen::Index z = 0; z < m; ++z) out.push_back(RationalVector::Unit(m, z));
    return out;
  }
  for (const auto& c : s.model.basis(k)) out.push_back(c.restrictions);
  return out;
}

void require_valid(const GeneratedSpace& s, const char* role) {
  const auto report = validate_model(s.data, s.model);
  if (!report.pass)
    throw PreconditionError(std::string(role) + " factor fails model validation: " + report.failures.front().message);
}

}  // namespace

GeneratedSpace gen_cpn(const std::vector<long>& a) {
  if (a.size() < 2) throw InvalidInput("gen_cpn needs at least two weights");
  if (std::set<long>(a.begin(), a.end()).size() != a.size()) throw InvalidInput("gen_cpn weights must be distinct");

  const int n = static_cast<int>(a.size()) - 1;
  std::vector<FixedPoint> points;
  for (std::size_t i = 0; i < a.size(); ++i) {
    FixedPoint p{"e" + std::to_string(i), {}, Rational(a[i])};
    for (std::size_t j = 0; j < a.size(); ++j)
      if (j != i) p.weights.push_back(a[j] - a[i]);
    points.push_back(std::move(p));
  }
  FixedPointData data(n, std::move(points));

  CohomologyModel model;
  const auto m = static_cast<Eigen::Index>(a.size());
  for (int k = 0; k < n; ++k) {
    auto& basis = model.bases[k];
    for (int e = 0; e <= k; ++e) {
      RationalVector v(m);
      for (Eigen::Index i = 0; i < m; ++i) v(i) = power(Rational(a[static_cast<std::size_t>(i)]), static_cast<unsigned>(e));
      basis.push_back({2 * k, std::move(v)});
    }
  }
  return {std::move(data), std::move(model)};
}

GeneratedSpace gen_product(const GeneratedSpace& left, const GeneratedSpace& right, const Rational& scale) {
  if (scale <= 0) throw PreconditionError("product moment scale must be positive");
  require_valid(left, "left");
  require_valid(right, "right");

  const int n1 = left.data.half_dim();
  const int n2 = right.data.half_dim();
  std::vector<FixedPoint> points;
  for (const auto& p : left.data.points()) {
    for (const auto& q : right.data.points()) {
      FixedPoint pq{p.id + "." + q.id, p.weights, p.moment + scale * q.moment};
      pq.weights.insert(pq.weights.end(), q.weights.begin(), q.weights.end());
      points.push_back(std::move(pq));
    }
  }
  FixedPointData data(n1 + n2, std::move(points));

  const auto m1 = static_cast<Eigen::Index>(left.data.size());
  const auto m2 = static_cast<Eigen::Index>(right.data.size());
  CohomologyModel model;
  for (int k = 0; k < n1 + n2; ++k) {
    std::vector<RationalVector> products;
    for (int i = 0; i <= k; ++i) {
      for (const auto& v : degree_space(left, i)) {
        for (const auto& w : degree_space(right, k - i)) {
          RationalVector vw(m1 * m2);
          for (Eigen::Index a = 0; a < m1; ++a)
            for (Eigen::Index b = 0; b < m2; ++b) vw(a * m2 + b) = v(a) * w(b);
          products.push_back(std::move(vw));
        }
      }
    }
    auto& basis = model.bases[k];
    for (auto& v : reduced_basis(products, m1 * m2)) basis.push_back({2 * k, std::move(v)});
  }

  GeneratedSpace out{std::move(data), std::move(model)};
  const auto report = validate_model(out.data, out.model);
  if (!report.pass) throw std::logic_error("product model fails validation: " + report.failures.front().message);
  return out;
}

FixedPointData corrupt(const FixedPointData& d, const Mutation& mutation) {
  if (std::holds_alternative<std::monostate>(mutation.change)) return d;
  std::vector<FixedPoint> points = d.points();
  FixedPoint& target = points[d.position(mutation.point)];
  if (const auto* w = std::get_if<WeightChange>(&mutation.change)) {
    if (w->index >= target.weights.size()) throw InvalidInput("weight index out of range");
    if (w->value == 0) throw InvalidInput("weights must stay nonzero");
    target.weights[w->index] = w->value;
  } else {
    target.moment = std::get<MomentChange>(mutation.change).value;
  }
  return FixedPointData(d.half_dim(), std::move(points));
}

Mutation inverse_mutation(const FixedPointData& d, const Mutation& mutation) {
  if (std::holds_alternative<std::monostate>(mutation.change)) return mutation;
  const FixedPoint& original = d[d.position(mutation.point)];
  if (const auto* w = std::get_if<WeightChange>(&mutation.change)) {
    if (w->index >= original.weights.size()) throw InvalidInput("weight index out of range");
    return {mutation.point, WeightChange{w->index, original.weights[w->index]}};
  }
  return {mutation.point, MomentChange{original.moment}};
}

FixedPointData synthetic_data(const BettiProfile& profile, const std::vector<Rational>& moments) {
  const int n = profile.half_dim();
  if (n < 1) throw InvalidInput("profile needs at least two entries");
  if (static_cast<int>(moments.size()) != profile.total())
    throw InvalidInput("expected " + std::to_string(profile.total()) + " moment values, got " +
                       std::to_string(moments.size()));
  std::vector<FixedPoint> points;
  for (int level = 0; level <= n; ++level) {
    const int count = profile.values[static_cast<std::size_t>(level)];
    if (count < 0) throw InvalidInput("negative Betti number");
    for (int c = 0; c < count; ++c) {
      FixedPoint p{"p" + std::to_string(points.size()), std::vector<long>(static_cast<std::size_t>(n), 1),
                   moments[points.size()]};
      for (int s = 0; s < level; ++s) p.weights[static_cast<std::size_t>(s)] = -1;
      points.push_back(std::move(p));
    }
  }
  return FixedPointData(n, std::move(points));
}

CohomologyModel claimed_model(const FixedPointData& d) {
  const int n = d.half_dim();
  const auto m = static_cast<Eigen::Index>(d.size());
  const BettiProfile profile = betti_profile(d);

  CohomologyModel model;
  std::vector<RationalVector> current{RationalVector::Constant(m, Rational(1))};
  model.bases[0].push_back({0, current.front()});
  int target_dim = profile.values[0];

  for (int k = 1; k < n; ++k) {
    target_dim += profile.values[static_cast<std::size_t>(k)];
    std::vector<RationalVector> candidates;
    RationalVector moment_power(m);
    for (Eigen::Index z = 0; z < m; ++z) moment_power(z) = power(d[static_cast<std::size_t>(z)].moment, static_cast<unsigned>(k));
    candidates.push_back(std::move(moment_power));
    for (Eigen::Index z = 0; z < m; ++z) {
      const int level = morse_index(d[static_cast<std::size_t>(z)]) / 2;
      if (level >= 1 && level <= k) candidates.push_back(RationalVector::Unit(m, z));
    }
    for (Eigen::Index z = 0; z < m; ++z) candidates.push_back(RationalVector::Unit(m, z));

    for (auto& v : candidates) {
      if (static_cast<int>(current.size()) >= target_dim) break;
      if (!in_span(current, v)) current.push_back(std::move(v));
    }
    auto& basis = model.bases[k];
    for (const auto& v : current) basis.push_back({2 * k, v});
  }
  return model;
}

}  // namespace betticert
