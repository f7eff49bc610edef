#include "exostein/scalar.hpp"

#include <stdexcept>

namespace exostein {

Integer parse_integer(std::string_view text) {
  std::string_view digits = text;
  if (!digits.empty() && digits.front() == '-') digits.remove_prefix(1);
  if (digits.empty()) throw std::invalid_argument("empty integer literal");
  for (char c : digits)
    if (c < '0' || c > '9')
      throw std::invalid_argument("malformed integer literal '" + std::string(text) + "'");
  return Integer(std::string(text));
}

std::string to_string(const Integer& value) { return value.str(); }

std::string to_string(const Rational& value) {
  const Integer num = numerator(value);
  const Integer den = denominator(value);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

Rational parse_rational(std::string_view text) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_integer(text));
  const Integer num = parse_integer(text.substr(0, slash));
  const Integer den = parse_integer(text.substr(slash + 1));
  if (den == 0) throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
  return Rational(num) / Rational(den);
}

std::int64_t to_int64(const Integer& value) {
  if (value > Integer(INT64_MAX) || value < Integer(INT64_MIN))
    throw std::out_of_range("integer does not fit in 64 bits: " + value.str());
  return value.convert_to<std::int64_t>();
}

IntVector make_vector(std::initializer_list<long long> entries) {
  IntVector v(static_cast<Eigen::Index>(entries.size()));
  Eigen::Index i = 0;
  for (long long e : entries) v(i++) = Integer(e);
  return v;
}

IntMatrix make_matrix(std::initializer_list<std::initializer_list<long long>> rows) {
  const auto r = static_cast<Eigen::Index>(rows.size());
  const auto c = r == 0 ? Eigen::Index{0}
                        : static_cast<Eigen::Index>(rows.begin()->size());
  IntMatrix m(r, c);
  Eigen::Index i = 0;
  for (const auto& row : rows) {
    if (static_cast<Eigen::Index>(row.size()) != c)
      throw std::invalid_argument("ragged matrix literal");
    Eigen::Index j = 0;
    for (long long e : row) m(i, j++) = Integer(e);
    ++i;
  }
  return m;
}

}  // namespace exostein
