#include "exostein/surgery.hpp"

#include <stdexcept>
#include <string>

namespace exostein {

namespace {

const char* kDerivedTopologyNote =
    "euler and sig are derived from the handle counts (one 0-handle, two "
    "1-handles, three 2-handles) and the intersection form; they are not "
    "stated explicitly";

}  // namespace

std::int64_t half_parameter(std::int64_t p) { return p % 2 != 0 ? (p + 1) / 2 : p / 2; }

Integer s_class_shift(std::int64_t p) {
  const Integer pp(p);
  return pp * pp - half_parameter(p) + 1;
}

Integer r_class_square(std::int64_t p) {
  const Integer pp(p);
  return -2 * pp * pp + pp - 3;
}

LogTransformFamilyMember x_family(std::int64_t p) {
  if (p <= 0) throw std::invalid_argument("log transform multiplicity must be positive");
  const std::string tag = std::to_string(p);

  LogTransformFamilyMember member;
  member.p = p;
  auto& m = member.manifold;
  m.name = "X_" + tag;
  IntMatrix gram(2, 2);
  gram << Integer(0), Integer(1), Integer(1), r_class_square(p);
  m.form = QuadraticForm(std::move(gram), {"T_" + tag, "R_" + tag});
  m.c1 = make_vector({0, -1 - p});
  m.euler = 2;
  m.sig = 0;
  m.simply_connected = true;
  m.boundary_homology_sphere = true;
  m.stein = true;
  m.contact_label = p % 2 != 0 ? "xi" : "eta";
  m.notes = {kDerivedTopologyNote,
             "basis (T_p, R_p) = ([gamma_p], [alpha_p - p beta_p]); c1 from rotation "
             "numbers r(alpha_p) = -1, r(beta_p) = 1, r(gamma_p) = 0"};

  member.s_class = IntVector(2);
  member.s_class << s_class_shift(p), Integer(1);
  return member;
}

LogTransformFamilyMember x_untransformed() {
  LogTransformFamilyMember member;
  member.p = 0;
  auto& m = member.manifold;
  m.name = "X";
  m.form = QuadraticForm(make_matrix({{0, 1}, {1, -2}}), {"T", "S"});
  m.c1 = make_vector({0, 0});
  m.euler = 2;
  m.sig = 0;
  m.simply_connected = true;
  m.boundary_homology_sphere = true;
  m.stein = true;
  m.contact_label = "xi";
  m.notes = {kDerivedTopologyNote,
             "basis (T, S) = ([gamma], [beta]); c1 from rotation numbers r(beta) = 0, "
             "r(gamma) = 0"};
  member.s_class = make_vector({0, 1});
  return member;
}

LogTransformFamilyMember x_member(std::int64_t p) {
  if (p < 0) throw std::invalid_argument("family label must be nonnegative");
  return p == 0 ? x_untransformed() : x_family(p);
}

QuadraticForm normalized_form(const LogTransformFamilyMember& member) {
  IntMatrix basis(2, 2);
  basis << Integer(1), member.s_class(0), Integer(0), member.s_class(1);
  const std::string tag = member.p == 0 ? "" : "_" + std::to_string(member.p);
  return QuadraticForm(congruence_transform(member.manifold.form.gram(), basis),
                       {"T" + tag, "S" + tag});
}

TorusMappingClass::TorusMappingClass() : matrix_(IntMatrix::Identity(3, 3)) {}

TorusMappingClass::TorusMappingClass(IntMatrix matrix) : matrix_(std::move(matrix)) {
  if (matrix_.rows() != 3 || matrix_.cols() != 3)
    throw std::invalid_argument("torus mapping class needs a 3x3 matrix");
  if (determinant(matrix_) != 1)
    throw std::invalid_argument("torus mapping class must have determinant 1");
}

IntVector TorusMappingClass::apply(const IntVector& v) const {
  if (v.size() != 3) throw std::invalid_argument("H_1(T^3) vectors have length 3");
  return (v.transpose() * matrix_).transpose();
}

TorusMappingClass fp_matrix(std::int64_t p) {
  if (p < 0) throw std::invalid_argument("f_p needs p >= 0");
  IntMatrix m = IntMatrix::Identity(3, 3);
  m(2, 1) = Integer(p);
  return TorusMappingClass(std::move(m));
}

TorusMappingClass compose(const TorusMappingClass& f, const TorusMappingClass& g) {
  return TorusMappingClass(g.matrix() * f.matrix());
}

bool stabilizes_summand(const IntMatrix& action) {
  if (action.rows() != 3 || action.cols() != 3)
    throw std::invalid_argument("expected a 3x3 action on H_1(T^3)");
  return action(0, 2) == 0 && action(1, 2) == 0;
}

bool stabilizes_summand(const TorusMappingClass& f) { return stabilizes_summand(f.matrix()); }

IntMatrix v_family_presentation(std::int64_t p) {
  if (p <= 0) throw std::invalid_argument("V_p needs p >= 1");
  IntMatrix m(2, 1);
  m << Integer(0), Integer(p);
  return m;
}

GroupDescriptor v_family_homology(std::int64_t p) { return cokernel(v_family_presentation(p)); }

}  // namespace exostein
