#include "exostein/handle.hpp"

#include <stdexcept>

namespace exostein {

std::string describe(const GroupDescriptor& group) {
  if (group.trivial()) return "0";
  std::string out;
  auto append = [&out](const std::string& term) {
    if (!out.empty()) out += " + ";
    out += term;
  };
  if (group.free_rank == 1)
    append("Z");
  else if (group.free_rank > 1)
    append("Z^" + std::to_string(group.free_rank));
  for (const auto& t : group.torsion) append("Z/" + to_string(t));
  return out;
}

FramedLinkPresentation::FramedLinkPresentation(IntMatrix linking_, IntVector rot_,
                                               std::optional<IntVector> tb_)
    : linking(std::move(linking_)), rot(std::move(rot_)), tb(std::move(tb_)) {
  if (!is_symmetric(linking)) throw std::invalid_argument("linking matrix is not symmetric");
  if (rot.size() != linking.rows())
    throw std::invalid_argument("one rotation number per component required");
  if (tb && tb->size() != linking.rows())
    throw std::invalid_argument("one Thurston-Bennequin number per component required");
}

void AlgebraicFourManifold::validate() const {
  if (c1.size() != form.rank())
    throw std::invalid_argument(name + ": c1 length does not match the form rank");
}

std::vector<Index> characteristic_defects(const AlgebraicFourManifold& m) {
  std::vector<Index> out;
  const auto& g = m.form.gram();
  for (Index i = 0; i < g.rows(); ++i)
    if ((m.c1(i) - g(i, i)) % 2 != 0) out.push_back(i);
  return out;
}

AlgebraicFourManifold invariants_from_link(const FramedLinkPresentation& link,
                                           std::string name) {
  AlgebraicFourManifold m;
  m.name = std::move(name);
  m.form = QuadraticForm(link.linking);
  m.c1 = link.rot;
  m.euler = 1 + static_cast<std::int64_t>(link.size());
  m.sig = signature(link.linking);
  m.simply_connected = true;
  const Integer det = determinant(link.linking);
  m.boundary_homology_sphere = det == 1 || det == -1;
  m.stein = link.tb.has_value() && stein_checks(link).all_ok();
  return m;
}

GroupDescriptor boundary_first_homology(const FramedLinkPresentation& link) {
  return cokernel(link.linking);
}

bool SteinReport::all_ok() const {
  for (bool ok : framing_ok)
    if (!ok) return false;
  for (bool ok : parity_ok)
    if (!ok) return false;
  return true;
}

SteinReport stein_checks(const FramedLinkPresentation& link) {
  if (!link.tb) throw LegendrianDataError();
  SteinReport report;
  const auto& tb = *link.tb;
  for (Index i = 0; i < link.size(); ++i) {
    report.framing_ok.push_back(link.linking(i, i) == tb(i) - 1);
    report.parity_ok.push_back((tb(i) + link.rot(i)) % 2 != 0);
  }
  return report;
}

Integer chern_eval(const AlgebraicFourManifold& m, const IntVector& v) {
  if (v.size() != m.c1.size())
    throw std::invalid_argument("class length does not match the rank of H_2");
  return m.c1.dot(v);
}

Rational c1_square(const FramedLinkPresentation& link) {
  const RatVector x = rational_solve(link.linking, link.rot);
  return x.dot(link.rot.cast<Rational>());
}

Rational d3(const FramedLinkPresentation& link) {
  const Rational c2 = c1_square(link);
  const Rational sigma(static_cast<long long>(signature(link.linking)));
  const Rational chi(static_cast<long long>(1 + link.size()));
  return (c2 - 3 * sigma - 2 * chi) / 4;
}

std::optional<std::string> d3_caveat(const FramedLinkPresentation& link) {
  const Integer det = determinant(link.linking);
  if (det == 1 || det == -1) return std::nullopt;
  return "boundary is not an integral homology sphere (H_1 = " +
         describe(boundary_first_homology(link)) +
         "); the value assumes c1 restricts to a torsion class on the boundary";
}

}  // namespace exostein
