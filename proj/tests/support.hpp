#ifndef BETTICERT_TESTS_SUPPORT_HPP
#define BETTICERT_TESTS_SUPPORT_HPP

// Random generators and independent oracles shared by the unit and
// acceptance suites. Nothing here calls into the code paths under test
// except to construct inputs.

#include "betticert/certify.hpp"
#include "betticert/fixdata.hpp"
#include "betticert/generators.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <set>
#include <string>
#include <vector>

namespace betticert::testing {

using Rng = std::mt19937_64;

inline long uniform(Rng& rng, long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng); }

/// `count` pairwise distinct integers in [-bound, bound].
inline std::vector<long> distinct_integers(Rng& rng, std::size_t count, long bound) {
  std::vector<long> pool;
  for (long v = -bound; v <= bound; ++v) pool.push_back(v);
  std::shuffle(pool.begin(), pool.end(), rng);
  pool.resize(count);
  return pool;
}

inline Rational random_rational(Rng& rng, long num_bound, long den_bound) {
  return Rational(uniform(rng, -num_bound, num_bound), uniform(rng, 1, den_bound));
}

inline RationalMatrix random_matrix(Rng& rng, Eigen::Index rows, Eigen::Index cols) {
  RationalMatrix m(rows, cols);
  // Sparse-ish small entries so that rank deficiency actually occurs.
  for (Eigen::Index i = 0; i < rows; ++i)
    for (Eigen::Index j = 0; j < cols; ++j) m(i, j) = uniform(rng, 0, 2) == 0 ? Rational(0) : random_rational(rng, 2, 2);
  if (rows > 1 && uniform(rng, 0, 1) == 0) m.row(rows - 1) = m.row(0) * Rational(uniform(rng, -2, 2));
  return m;
}

/// Determinant by permutation expansion.
inline Rational permutation_determinant(const RationalMatrix& m) {
  const auto n = static_cast<std::size_t>(m.rows());
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  Rational det = 0;
  do {
    int inversions = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j)
        if (perm[i] > perm[j]) ++inversions;
    Rational term = inversions % 2 == 0 ? 1 : -1;
    for (std::size_t i = 0; i < n; ++i) term *= m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(perm[i]));
    det += term;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return det;
}

/// sum_i a_i^e / prod_{l != i} (a_i - a_l); zero for e < |a| - 1 (Lagrange).
inline Rational lagrange_sum(const std::vector<long>& a, unsigned e) {
  Rational sum = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    Rational denom = 1;
    for (std::size_t l = 0; l < a.size(); ++l)
      if (l != i) denom *= a[l] - a[i];
    Rational num = 1;
    for (unsigned t = 0; t < e; ++t) num *= a[i];
    sum += num / denom;
  }
  return sum;
}

/// Palindromic profile of length n + 1 with b_0 = 1 and entries in [0, 3].
inline BettiProfile random_palindrome(Rng& rng, int n) {
  std::vector<int> b(static_cast<std::size_t>(n) + 1);
  for (int i = 0; i <= n / 2; ++i) {
    const int v = i == 0 ? 1 : static_cast<int>(uniform(rng, 0, 3));
    b[static_cast<std::size_t>(i)] = v;
    b[static_cast<std::size_t>(n - i)] = v;
  }
  return {b};
}

/// Palindromic profile whose first unimodality violation b_2k > b_2k+2 is at
/// a k with n - 2k >= 3.
inline std::pair<BettiProfile, int> random_violating_palindrome(Rng& rng, int n) {
  const int k = static_cast<int>(uniform(rng, 0, (n - 3) / 2));
  std::vector<int> b(static_cast<std::size_t>(n) + 1);
  b[0] = 1;
  for (int i = 1; i <= k; ++i) b[static_cast<std::size_t>(i)] = b[static_cast<std::size_t>(i) - 1] + static_cast<int>(uniform(rng, 0, 1));
  if (k > 0) b[static_cast<std::size_t>(k)] += 1;  // ensure room below
  const int top = b[static_cast<std::size_t>(k)];
  b[static_cast<std::size_t>(k) + 1] = static_cast<int>(uniform(rng, 0, top - 1));
  for (int i = k + 2; i <= n / 2; ++i) b[static_cast<std::size_t>(i)] = static_cast<int>(uniform(rng, 0, 3));
  for (int i = 0; i <= n / 2; ++i) b[static_cast<std::size_t>(n - i)] = b[static_cast<std::size_t>(i)];
  return {BettiProfile{b}, k};
}

/// Index-increasing data realizing `profile`: weights of random magnitude
/// in [1, 4] with exactly `level` negative entries at random slots, and
/// moments in [level, level + 1) (ties within a level are possible).
inline FixedPointData random_index_increasing(Rng& rng, const BettiProfile& profile) {
  const int n = profile.half_dim();
  std::vector<FixedPoint> points;
  for (int level = 0; level <= n; ++level) {
    for (int c = 0; c < profile.values[static_cast<std::size_t>(level)]; ++c) {
      std::vector<long> weights(static_cast<std::size_t>(n));
      for (int s = 0; s < n; ++s) weights[static_cast<std::size_t>(s)] = (s < level ? -1 : 1) * uniform(rng, 1, 4);
      std::shuffle(weights.begin(), weights.end(), rng);
      const long den = uniform(rng, 1, 6);
      const Rational moment = Rational(level) + Rational(uniform(rng, 0, den - 1), den);
      points.push_back({"q" + std::to_string(points.size()), std::move(weights), moment});
    }
  }
  std::shuffle(points.begin(), points.end(), rng);
  return FixedPointData(n, std::move(points));
}

/// Random class of degree 2k vanishing on `target`; each other entry is zero
/// with probability about 1/3.
inline EquivariantClass random_vanishing_on(Rng& rng, const FixedPointData& d, int k,
                                            const std::vector<std::string>& target) {
  const std::set<std::string> zero(target.begin(), target.end());
  RationalVector v(static_cast<Eigen::Index>(d.size()));
  for (std::size_t z = 0; z < d.size(); ++z) {
    if (zero.count(d[z].id) || uniform(rng, 0, 2) == 0)
      v(static_cast<Eigen::Index>(z)) = 0;
    else
      v(static_cast<Eigen::Index>(z)) = Rational(uniform(rng, 1, 5) * (uniform(rng, 0, 1) ? 1 : -1), uniform(rng, 1, 3));
  }
  return {2 * k, std::move(v)};
}

/// The canonical five-dimensional synthetic dataset with profile
/// [1, 2, 1, 1, 2, 1].
inline FixedPointData synthetic_n5() {
  return synthetic_data(BettiProfile{{1, 2, 1, 1, 2, 1}},
                        {Rational(0), Rational(1), Rational(3, 2), Rational(2), Rational(3), Rational(4),
                         Rational(9, 2), Rational(5)});
}

}  // namespace betticert::testing

#endif  // BETTICERT_TESTS_SUPPORT_HPP
