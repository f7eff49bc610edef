#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include <Eigen/Core>
#include <boost/multiprecision/eigen.hpp>
#include <boost/multiprecision/gmp.hpp>

namespace exostein {

// Expression templates are disabled: they do not compose with Eigen's own.
using Integer = boost::multiprecision::number<boost::multiprecision::gmp_int,
                                              boost::multiprecision::et_off>;
using Rational =
    boost::multiprecision::number<boost::multiprecision::gmp_rational,
                                  boost::multiprecision::et_off>;

template <typename Scalar>
using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
template <typename Scalar>
using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

using IntMatrix = Matrix<Integer>;
using IntVector = Vector<Integer>;
using RatMatrix = Matrix<Rational>;
using RatVector = Vector<Rational>;

/// Exact field in which a scalar type embeds (used for elimination).
template <typename Scalar>
struct FieldOf;
template <>
struct FieldOf<Integer> {
  using type = Rational;
};
template <>
struct FieldOf<Rational> {
  using type = Rational;
};
template <typename Scalar>
using FieldOfT = typename FieldOf<Scalar>::type;

/// Decimal digits, optional leading '-'. Throws std::invalid_argument.
Integer parse_integer(std::string_view text);

std::string to_string(const Integer& value);

/// Canonical form: "a" for integers, "a/b" with b > 0 in lowest terms.
std::string to_string(const Rational& value);

/// Accepts the canonical form and any unreduced "a/b" with b != 0.
Rational parse_rational(std::string_view text);

std::int64_t to_int64(const Integer& value);

IntVector make_vector(std::initializer_list<long long> entries);
IntMatrix make_matrix(std::initializer_list<std::initializer_list<long long>> rows);

}  // namespace exostein
