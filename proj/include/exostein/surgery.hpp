#pragma once

#include <cstdint>

#include "exostein/handle.hpp"

namespace exostein {

/// One member of the p-log-transform family.  p = 0 labels the untransformed
/// manifold X, whose basis is (T, S) instead of (T_p, R_p).
struct LogTransformFamilyMember {
  std::int64_t p = 0;
  AlgebraicFourManifold manifold;
  IntVector s_class;  // coordinates of the distinguished class S_p (or S)
};

/// q with p = 2q - 1 (p odd) or p = 2q (p even).
std::int64_t half_parameter(std::int64_t p);

/// Coefficient k of S_p = R_p + k T_p, namely p^2 - q + 1.
Integer s_class_shift(std::int64_t p);

/// -2p^2 + p - 3, the self-intersection of R_p.
Integer r_class_square(std::int64_t p);

/// X_p for p >= 1; throws std::invalid_argument otherwise.
LogTransformFamilyMember x_family(std::int64_t p);

/// X itself, under p-label 0.
LogTransformFamilyMember x_untransformed();

/// x_untransformed() for p = 0, x_family(p) for p >= 1.
LogTransformFamilyMember x_member(std::int64_t p);

/// The member's form in the basis (T_p, S_p).
QuadraticForm normalized_form(const LogTransformFamilyMember& member);

/// Orientation-preserving self-diffeomorphism class of T^3, recorded by its
/// action on H_1(T^3) = Z^3.  Classes act on row vectors: v -> v M.
class TorusMappingClass {
 public:
  TorusMappingClass();
  /// Throws std::invalid_argument unless `matrix` is 3x3 with det 1.
  explicit TorusMappingClass(IntMatrix matrix);

  const IntMatrix& matrix() const { return matrix_; }
  IntVector apply(const IntVector& v) const;

  friend bool operator==(const TorusMappingClass&, const TorusMappingClass&) = default;

 private:
  IntMatrix matrix_;
};

/// [[1,0,0],[0,1,0],[0,p,1]]; p = 0 is the identity.
TorusMappingClass fp_matrix(std::int64_t p);

/// f o g (g first).  With the row convention its matrix is G * F.
TorusMappingClass compose(const TorusMappingClass& f, const TorusMappingClass& g);

/// Whether v -> v M maps Z + Z + 0 into itself: the first two rows have
/// vanishing third coordinate.  Accepts any 3x3 integer matrix.
bool stabilizes_summand(const IntMatrix& action);
bool stabilizes_summand(const TorusMappingClass& f);

/// Presentation of H_1(V_p): generators of H_1(T^2), one relator (0, p).
IntMatrix v_family_presentation(std::int64_t p);

/// H_1(V_p) = Z + Z/p.
GroupDescriptor v_family_homology(std::int64_t p);

}  // namespace exostein
