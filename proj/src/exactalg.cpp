#include "betticert/exactalg.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

namespace betticert {

namespace {

bool is_integer_literal(std::string_view s) {
  if (!s.empty() && s.front() == '-') s.remove_prefix(1);
  return !s.empty() && std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isdigit(c); });
}

}  // namespace

std::string to_string(const Rational& q) {
  const Integer num = boost::multiprecision::numerator(q);
  const Integer den = boost::multiprecision::denominator(q);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

Rational parse_rational(std::string_view text) {
  const auto slash = text.find('/');
  const std::string_view num_text = text.substr(0, slash);
  if (!is_integer_literal(num_text))
    throw std::invalid_argument("malformed rational: '" + std::string(text) + "'");
  const Integer num(std::string{num_text});
  if (slash == std::string_view::npos) return Rational(num);

  const std::string_view den_text = text.substr(slash + 1);
  if (!is_integer_literal(den_text) || den_text.front() == '-')
    throw std::invalid_argument("malformed rational: '" + std::string(text) + "'");
  const Integer den(std::string{den_text});
  if (den == 0) throw std::invalid_argument("zero denominator: '" + std::string(text) + "'");
  return Rational(num, den);
}

int sign(const Rational& q) { return q.sign(); }

Rational power(const Rational& base, unsigned exponent) {
  Rational out(1);
  for (unsigned i = 0; i < exponent; ++i) out *= base;
  return out;
}

RationalMatrix columns_to_matrix(const std::vector<RationalVector>& columns, Eigen::Index rows) {
  RationalMatrix m(rows, static_cast<Eigen::Index>(columns.size()));
  for (std::size_t j = 0; j < columns.size(); ++j) {
    if (columns[j].size() != rows) throw std::invalid_argument("column length mismatch");
    m.col(static_cast<Eigen::Index>(j)) = columns[j];
  }
  return m;
}

bool in_span(const std::vector<RationalVector>& columns, const RationalVector& v) {
  const RationalMatrix base = columns_to_matrix(columns, v.size());
  RationalMatrix extended(v.size(), base.cols() + 1);
  extended.leftCols(base.cols()) = base;
  extended.col(base.cols()) = v;
  return rank(extended) == rank(base);
}

}  // namespace betticert
