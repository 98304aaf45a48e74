#include "betticert/eqcalc.hpp"
#include "betticert/errors.hpp"
#include "betticert/generators.hpp"

#include "support.hpp"

#include <doctest.h>

using namespace betticert;

namespace {

RationalVector vec(std::initializer_list<Rational> values) {
  RationalVector v(static_cast<Eigen::Index>(values.size()));
  Eigen::Index i = 0;
  for (const auto& x : values) v(i++) = x;
  return v;
}

EquivariantClass cls(int degree, std::initializer_list<Rational> values) { return {degree, vec(values)}; }

}  // namespace

TEST_CASE("equivariant symplectic classes restrict to r - H") {
  const auto cp1 = gen_cpn({0, 1}).data;
  CHECK(omega_class(cp1, 0) == cls(2, {0, -1}));
  CHECK(omega_class(cp1, Rational(1, 2)) == cls(2, {Rational(1, 2), Rational(-1, 2)}));
  CHECK(omega_class(gen_cpn({0, 1, 2}).data, 0) == cls(2, {0, -1, -2}));
}

TEST_CASE("products and the u-module action") {
  const auto a = cls(2, {1, -1});
  CHECK(multiply(a, a) == cls(4, {1, 1}));

  const auto cp2 = gen_cpn({0, 1, 2}).data;
  const auto alpha = cls(2, {1, 0, -1});
  CHECK(multiply(alpha, unit_class(cp2)) == alpha);
  CHECK(multiply(cls(2, {0, -1, -2}), alpha) == cls(4, {0, 0, 2}));
  CHECK_THROWS_AS(multiply(a, alpha), InvalidInput);

  CHECK(scale_u(unit_class(cp2), 1) == cls(2, {1, 1, 1}));
  CHECK(scale_u(alpha, 2) == cls(6, {1, 0, -1}));
  CHECK(scale_u(scale_u(alpha, 1), 1) == scale_u(alpha, 2));
  CHECK_THROWS_AS(scale_u(alpha, 0), PreconditionError);
}

TEST_CASE("ring and module axioms on random classes") {
  testing::Rng rng(13);
  for (int trial = 0; trial < 100; ++trial) {
    const auto m = testing::uniform(rng, 1, 6);
    auto random_class = [&](int degree) {
      RationalVector v(m);
      for (Eigen::Index i = 0; i < m; ++i) v(i) = testing::random_rational(rng, 5, 4);
      return EquivariantClass{degree, v};
    };
    const auto a = random_class(2), b = random_class(4), c = random_class(2), c2 = random_class(2);
    CHECK(multiply(a, b) == multiply(b, a));
    CHECK(multiply(multiply(a, b), c) == multiply(a, multiply(b, c)));
    const EquivariantClass sum{2, c.restrictions + c2.restrictions};
    const auto lhs = multiply(b, sum);
    const auto rhs = EquivariantClass{6, multiply(b, c).restrictions + multiply(b, c2).restrictions};
    CHECK(lhs == rhs);
    CHECK(multiply(scale_u(a, 1), b) == scale_u(multiply(a, b), 1));
  }
}

TEST_CASE("integration by localization") {
  const auto cp1 = gen_cpn({0, 1}).data;
  auto r = integrate(cp1, unit_class(cp1));
  CHECK(r.scalar == 0);
  CHECK(r.u_exponent == -1);

  const auto cp2 = gen_cpn({0, 1, 2}).data;
  r = integrate(cp2, multiply(cls(2, {1, 0, -1}), cls(2, {1, 0, -1})));
  CHECK(r.scalar == 1);
  CHECK(r.u_exponent == 0);

  r = integrate(cp2, cls(2, {0, -1, -2}));
  CHECK(r.scalar == 0);
  CHECK(r.u_exponent == -1);

  CHECK_THROWS_AS(integrate(cp2, cls(0, {1, 1})), InvalidInput);
}

TEST_CASE("restriction matrices") {
  const auto cp2 = gen_cpn({0, 1, 2});
  const auto& basis = cp2.model.basis(1);
  const RationalMatrix m = restriction_matrix(cp2.data, basis, {"e1"});
  REQUIRE(m.rows() == 1);
  REQUIRE(m.cols() == 2);
  CHECK(m(0, 0) == 1);
  CHECK(m(0, 1) == 1);

  std::vector<EquivariantClass> units;
  for (Eigen::Index z = 0; z < 3; ++z) units.push_back({4, RationalVector::Unit(3, z)});
  CHECK(restriction_matrix(cp2.data, units, {"e0", "e1", "e2"}) == RationalMatrix::Identity(3, 3));

  const RationalMatrix empty = restriction_matrix(cp2.data, basis, {});
  CHECK(empty.rows() == 0);
  CHECK(empty.cols() == 2);
  CHECK(kernel_basis(empty).size() == 2);

  CHECK_THROWS_AS(restriction_matrix(cp2.data, basis, {"nope"}), InvalidInput);
}

TEST_CASE("vanishing classes") {
  const auto cp2 = gen_cpn({0, 1, 2});
  const auto alpha = vanishing_class(cp2.data, cp2.model, 1, {"e1"});
  REQUIRE(alpha);
  CHECK(*alpha == cls(2, {1, 0, -1}));

  const auto first = vanishing_class(cp2.data, cp2.model, 1, {});
  REQUIRE(first);
  CHECK(*first == cp2.model.basis(1).front());

  CHECK_FALSE(vanishing_class(cp2.data, cp2.model, 1, {"e0", "e2"}));
  CHECK_THROWS_AS(vanishing_class(cp2.data, cp2.model, 2, {"e0"}), PreconditionError);
}

TEST_CASE("vanishing_class returns a class iff the restriction has a kernel") {
  testing::Rng rng(17);
  for (int trial = 0; trial < 80; ++trial) {
    const auto a = testing::distinct_integers(rng, static_cast<std::size_t>(testing::uniform(rng, 2, 6)), 6);
    const auto space = gen_cpn(a);
    const int n = space.data.half_dim();
    const int k = static_cast<int>(testing::uniform(rng, 0, n - 1));
    std::vector<std::string> targets;
    for (const auto& p : space.data.points())
      if (testing::uniform(rng, 0, 1)) targets.push_back(p.id);
    const auto& basis = space.model.basis(k);
    const auto r = rank(restriction_matrix(space.data, basis, targets));
    const auto alpha = vanishing_class(space.data, space.model, k, targets);
    CHECK(alpha.has_value() == (r < static_cast<Eigen::Index>(basis.size())));
    if (targets.size() < basis.size()) CHECK(alpha.has_value());
    if (alpha) {
      CHECK_FALSE(alpha->is_zero());
      CHECK(alpha->degree == 2 * k);
      for (const auto& id : targets) CHECK(alpha->restrictions(static_cast<Eigen::Index>(space.data.position(id))) == 0);
    }
  }
}

TEST_CASE("model validation") {
  const auto cp2 = gen_cpn({0, 1, 2});
  CHECK(validate_model(cp2.data, cp2.model).pass);

  SUBCASE("wrong degree-2 class fails the moment identity") {
    CohomologyModel bad = cp2.model;
    bad.bases[1][1] = cls(2, {0, 1, 3});
    CHECK(validate_model_structure(cp2.data, bad).pass);
    const auto report = validate_model(cp2.data, bad);
    CHECK_FALSE(report.pass);
    bool found = false;
    for (const auto& f : report.failures)
      if (f.check == "moment-identity" && f.residual == Rational(1, 2)) found = true;
    CHECK(found);
  }
  SUBCASE("degree-0 space must be the constants") {
    CohomologyModel bad = cp2.model;
    bad.bases[0][0] = cls(0, {1, 0, 0});
    const auto report = validate_model(cp2.data, bad);
    CHECK_FALSE(report.pass);
    CHECK(report.failures.front().check == "unit");
  }
  SUBCASE("dimension law") {
    CohomologyModel bad = cp2.model;
    bad.bases[1].pop_back();
    const auto report = validate_model_structure(cp2.data, bad);
    CHECK_FALSE(report.pass);
    CHECK(report.failures.front().check == "dimension");
  }
  SUBCASE("dependent basis") {
    CohomologyModel bad = cp2.model;
    bad.bases[1][1] = cls(2, {2, 2, 2});
    CHECK_FALSE(validate_model_structure(cp2.data, bad).pass);
  }
  SUBCASE("u-module inclusion") {
    const auto cp3 = gen_cpn({0, 1, 2, 3});
    CohomologyModel bad = cp3.model;
    // R_4 spanned by 1, H, H^2 -> replace 1 by H^3: still dimension 3 but
    // no longer contains R_2
    bad.bases[2][0] = cls(4, {0, 1, 8, 27});
    const auto report = validate_model_structure(cp3.data, bad);
    CHECK_FALSE(report.pass);
    CHECK(report.failures.front().check == "u-module");
  }
  SUBCASE("missing degree") {
    CohomologyModel bad = cp2.model;
    bad.bases.erase(1);
    CHECK_FALSE(validate_model_structure(cp2.data, bad).pass);
  }
}

TEST_CASE("products of model classes below the top degree integrate to zero") {
  for (const auto& space : {gen_cpn({0, 1, 2, 3}), gen_cpn({-2, 5, 1, 3, 0}),
                            gen_product(gen_cpn({0, 1, 2}), gen_cpn({0, 1}), Rational(1, 3))}) {
    const int n = space.data.half_dim();
    for (const auto& [k1, b1] : space.model.bases)
      for (const auto& [k2, b2] : space.model.bases)
        if (k1 + k2 < n)
          for (const auto& x : b1)
            for (const auto& y : b2) CHECK(integrate(space.data, multiply(x, y)).scalar == 0);
  }
}
