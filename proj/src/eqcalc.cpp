#include "betticert/eqcalc.hpp"

#include "betticert/errors.hpp"

namespace betticert {

bool EquivariantClass::is_zero() const {
  for (Eigen::Index i = 0; i < restrictions.size(); ++i)
    if (restrictions(i) != 0) return false;
  return true;
}

bool EquivariantClass::operator==(const EquivariantClass& other) const {
  if (degree != other.degree || restrictions.size() != other.restrictions.size()) return false;
  for (Eigen::Index i = 0; i < restrictions.size(); ++i)
    if (restrictions(i) != other.restrictions(i)) return false;
  return true;
}

EquivariantClass unit_class(const FixedPointData& d) {
  return {0, RationalVector::Constant(static_cast<Eigen::Index>(d.size()), Rational(1))};
}

EquivariantClass omega_class(const FixedPointData& d, const Rational& shift) {
  RationalVector r(static_cast<Eigen::Index>(d.size()));
  for (std::size_t z = 0; z < d.size(); ++z) r(static_cast<Eigen::Index>(z)) = shift - d[z].moment;
  return {2, std::move(r)};
}

EquivariantClass multiply(const EquivariantClass& a, const EquivariantClass& b) {
  if (a.restrictions.size() != b.restrictions.size())
    throw InvalidInput("classes belong to different datasets");
  return {a.degree + b.degree, a.restrictions.cwiseProduct(b.restrictions)};
}

EquivariantClass scale_u(const EquivariantClass& a, int power) {
  if (power < 1) throw PreconditionError("scale_u needs a positive power of u");
  return {a.degree + 2 * power, a.restrictions};
}

IntegrationResult integrate(const FixedPointData& d, const EquivariantClass& a) {
  if (a.restrictions.size() != static_cast<Eigen::Index>(d.size()))
    throw InvalidInput("class does not match the dataset");
  Rational sum = 0;
  for (std::size_t z = 0; z < d.size(); ++z)
    sum += a.restrictions(static_cast<Eigen::Index>(z)) / Rational(euler_coefficient(d[z]));
  return {sum, a.degree_index() - d.half_dim()};
}

RationalMatrix restriction_matrix(const FixedPointData& d, const std::vector<EquivariantClass>& basis,
                                  const std::vector<std::string>& targets) {
  for (const auto& c : basis) {
    if (c.restrictions.size() != static_cast<Eigen::Index>(d.size()))
      throw InvalidInput("class does not match the dataset");
    if (c.degree != basis.front().degree) throw PreconditionError("basis mixes degrees");
  }
  RationalMatrix m(static_cast<Eigen::Index>(targets.size()), static_cast<Eigen::Index>(basis.size()));
  for (std::size_t i = 0; i < targets.size(); ++i) {
    const auto z = static_cast<Eigen::Index>(d.position(targets[i]));
    for (std::size_t j = 0; j < basis.size(); ++j)
      m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = basis[j].restrictions(z);
  }
  return m;
}

const std::vector<EquivariantClass>& CohomologyModel::basis(int k) const {
  auto it = bases.find(k);
  if (it == bases.end()) throw PreconditionError("model has no basis for degree " + std::to_string(2 * k));
  return it->second;
}

std::optional<EquivariantClass> vanishing_class(const FixedPointData& d, const CohomologyModel& model,
                                                int k, const std::vector<std::string>& targets) {
  const auto& basis = model.basis(k);
  const auto kernel = kernel_basis(restriction_matrix(d, basis, targets));
  if (kernel.empty()) return std::nullopt;
  const RationalVector& c = kernel.front();
  RationalVector v = RationalVector::Constant(static_cast<Eigen::Index>(d.size()), Rational(0));
  for (std::size_t j = 0; j < basis.size(); ++j) v += c(static_cast<Eigen::Index>(j)) * basis[j].restrictions;
  return EquivariantClass{2 * k, std::move(v)};
}

namespace {

std::vector<RationalVector> vectors_of(const std::vector<EquivariantClass>& classes) {
  std::vector<RationalVector> out;
  out.reserve(classes.size());
  for (const auto& c : classes) out.push_back(c.restrictions);
  return out;
}

void fail(ModelReport& report, std::string check, int k, std::string message,
          std::optional<Rational> residual = std::nullopt) {
  report.pass = false;
  report.failures.push_back({std::move(check), k, std::move(message), std::move(residual)});
}

}  // namespace

ModelReport validate_model_structure(const FixedPointData& d, const CohomologyModel& model) {
  ModelReport report;
  const int n = d.half_dim();
  const auto m = static_cast<Eigen::Index>(d.size());
  const BettiProfile profile = betti_profile(d);

  for (const auto& [k, basis] : model.bases)
    if (k < 0 || k >= n) fail(report, "structure", k, "basis stored for degree outside 0.." + std::to_string(2 * (n - 1)));

  int expected_dim = 0;
  for (int k = 0; k < n; ++k) {
    expected_dim += profile.values[static_cast<std::size_t>(k)];
    auto it = model.bases.find(k);
    if (it == model.bases.end()) {
      fail(report, "structure", k, "missing basis for degree " + std::to_string(2 * k));
      continue;
    }
    const auto& basis = it->second;
    bool shapes_ok = true;
    for (const auto& c : basis) {
      if (c.degree != 2 * k || c.restrictions.size() != m) {
        fail(report, "structure", k, "basis class has wrong degree or length");
        shapes_ok = false;
        break;
      }
    }
    if (!shapes_ok) continue;

    const auto vecs = vectors_of(basis);
    const auto r = rank(columns_to_matrix(vecs, m));
    if (r != static_cast<Eigen::Index>(basis.size()))
      fail(report, "dimension", k, "basis for degree " + std::to_string(2 * k) + " is linearly dependent");
    if (static_cast<int>(basis.size()) != expected_dim)
      fail(report, "dimension", k,
           "dim R_" + std::to_string(2 * k) + " = " + std::to_string(basis.size()) + ", expected b_0 + ... + b_" +
               std::to_string(2 * k) + " = " + std::to_string(expected_dim));

    if (k == 0) {
      const RationalVector ones = RationalVector::Constant(m, Rational(1));
      if (!(basis.size() == 1 && in_span(vecs, ones)))
        fail(report, "unit", 0, "degree-0 space is not spanned by the constant class 1");
    } else if (auto prev = model.bases.find(k - 1); prev != model.bases.end()) {
      for (const auto& c : prev->second) {
        if (c.restrictions.size() == m && !in_span(vecs, c.restrictions)) {
          fail(report, "u-module", k,
               "u * R_" + std::to_string(2 * k - 2) + " is not contained in R_" + std::to_string(2 * k));
          break;
        }
      }
    }
  }
  return report;
}

ModelReport validate_model(const FixedPointData& d, const CohomologyModel& model) {
  ModelReport report = validate_model_structure(d, model);
  if (!report.pass) return report;

  const int n = d.half_dim();
  for (const auto& [k, basis] : model.bases) {
    for (std::size_t j = 0; j < basis.size(); ++j) {
      for (int e = 0; k + e < n; ++e) {
        Rational sum = 0;
        for (std::size_t z = 0; z < d.size(); ++z)
          sum += basis[j].restrictions(static_cast<Eigen::Index>(z)) * power(d[z].moment, static_cast<unsigned>(e)) /
                 Rational(euler_coefficient(d[z]));
        if (sum != 0)
          fail(report, "moment-identity", k,
               "basis class " + std::to_string(j) + " of degree " + std::to_string(2 * k) + ": sum a_z H^" +
                   std::to_string(e) + " / prod w = " + to_string(sum) + " (expected 0)",
               sum);
      }
    }
  }

  for (const auto& [k1, left] : model.bases) {
    for (const auto& [k2, right] : model.bases) {
      if (k2 < k1 || k1 + k2 >= n) continue;
      const auto target = vectors_of(model.bases.at(k1 + k2));
      for (std::size_t i = 0; i < left.size(); ++i) {
        for (std::size_t j = (k1 == k2 ? i : 0); j < right.size(); ++j) {
          const auto product = multiply(left[i], right[j]);
          const auto integral = integrate(d, product);
          if (integral.scalar != 0)
            fail(report, "product", k1 + k2,
                 "product of classes (" + std::to_string(2 * k1) + ":" + std::to_string(i) + ") and (" +
                     std::to_string(2 * k2) + ":" + std::to_string(j) + ") integrates to " +
                     to_string(integral.scalar) + " * u^" + std::to_string(integral.u_exponent),
                 integral.scalar);
          if (!in_span(target, product.restrictions))
            fail(report, "product", k1 + k2,
                 "product of classes (" + std::to_string(2 * k1) + ":" + std::to_string(i) + ") and (" +
                     std::to_string(2 * k2) + ":" + std::to_string(j) + ") is not in R_" +
                     std::to_string(2 * (k1 + k2)));
        }
      }
    }
  }
  return report;
}

}  // namespace betticert
