#pragma once

// JSON schemas.  Arbitrary-precision integers (matrix entries, vectors,
// c1, bounds) are decimal strings; counts and parameters are JSON numbers;
// rationals are "a/b" strings.  Readers also accept plain JSON integers.

#include <nlohmann/json.hpp>

#include "exostein/obstruct.hpp"

namespace nlohmann {

template <>
struct adl_serializer<exostein::Integer> {
  static void to_json(json& j, const exostein::Integer& value);
  static void from_json(const json& j, exostein::Integer& value);
};

template <>
struct adl_serializer<exostein::Rational> {
  static void to_json(json& j, const exostein::Rational& value);
  static void from_json(const json& j, exostein::Rational& value);
};

template <>
struct adl_serializer<exostein::IntMatrix> {
  static void to_json(json& j, const exostein::IntMatrix& m);
  static void from_json(const json& j, exostein::IntMatrix& m);
};

template <>
struct adl_serializer<exostein::IntVector> {
  static void to_json(json& j, const exostein::IntVector& v);
  static void from_json(const json& j, exostein::IntVector& v);
};

}  // namespace nlohmann

namespace exostein {

using Json = nlohmann::json;

void to_json(Json& j, const QuadraticForm& form);
void from_json(const Json& j, QuadraticForm& form);

void to_json(Json& j, const FormClass& c);
void from_json(const Json& j, FormClass& c);

void to_json(Json& j, const FramedLinkPresentation& link);
void from_json(const Json& j, FramedLinkPresentation& link);

void to_json(Json& j, const AlgebraicFourManifold& m);
void from_json(const Json& j, AlgebraicFourManifold& m);

/// Includes the derived "normalized_form" on output; ignored on input.
void to_json(Json& j, const LogTransformFamilyMember& member);
void from_json(const Json& j, LogTransformFamilyMember& member);

void to_json(Json& j, const TorusMappingClass& f);
void from_json(const Json& j, TorusMappingClass& f);

void to_json(Json& j, const GroupDescriptor& g);
void from_json(const Json& j, GroupDescriptor& g);

void to_json(Json& j, const GenusBound& b);
void from_json(const Json& j, GenusBound& b);

void to_json(Json& j, const InfinitudeCertificate& cert);
void from_json(const Json& j, InfinitudeCertificate& cert);

/// Canonical text: two-space indent, sorted keys, trailing newline.
std::string dump(const Json& j);

/// Reads and parses a JSON file.  Parse errors carry line and column.
Json load_json_file(const std::string& path);

}  // namespace exostein
