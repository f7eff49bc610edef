#pragma once

#include <optional>
#include <string>
#include <vector>

#include "exostein/intlin.hpp"
#include "exostein/quadform.hpp"

namespace exostein {

using GroupDescriptor = AbelianGroup<Integer>;

/// Human-readable group, e.g. "Z + Z/5", "0" for the trivial group.
std::string describe(const GroupDescriptor& group);

/// 2-handlebody on a framed link in S^3, no 1-handles.  The diagonal of
/// `linking` holds framings, off-diagonal entries linking numbers.
struct FramedLinkPresentation {
  IntMatrix linking;
  IntVector rot;
  std::optional<IntVector> tb;

  FramedLinkPresentation() = default;
  FramedLinkPresentation(IntMatrix linking, IntVector rot,
                         std::optional<IntVector> tb = std::nullopt);

  Index size() const { return linking.rows(); }
};

/// Algebraic shadow of a compact 4-manifold: intersection form on a chosen
/// basis of H_2, c_1 evaluated on that basis, and topological flags.
struct AlgebraicFourManifold {
  std::string name;
  QuadraticForm form;
  IntVector c1;
  std::int64_t euler = 1;
  std::int64_t sig = 0;
  bool simply_connected = true;
  bool boundary_homology_sphere = true;
  bool stein = false;
  std::string contact_label;       // boundary contact structure, label only
  std::vector<std::string> notes;  // provenance of derived fields

  /// Throws std::invalid_argument when c1 length and form rank disagree.
  void validate() const;
};

/// Basis indices i with c1(e_i) != e_i.e_i (mod 2).  Empty for any c_1 of an
/// almost-complex structure.
std::vector<Index> characteristic_defects(const AlgebraicFourManifold& m);

AlgebraicFourManifold invariants_from_link(const FramedLinkPresentation& link,
                                           std::string name = "link handlebody");

/// H_1 of the boundary: cokernel of the linking matrix.
GroupDescriptor boundary_first_homology(const FramedLinkPresentation& link);

struct SteinReport {
  std::vector<bool> framing_ok;  // framing = tb - 1
  std::vector<bool> parity_ok;   // tb + rot odd

  bool all_ok() const;
};

SteinReport stein_checks(const FramedLinkPresentation& link);

Integer chern_eval(const AlgebraicFourManifold& m, const IntVector& v);

/// c_1^2 = x . rot where linking * x = rot.
Rational c1_square(const FramedLinkPresentation& link);

/// (c_1^2 - 3 sigma - 2 chi) / 4 with chi = 1 + n.
Rational d3(const FramedLinkPresentation& link);

/// Set when the boundary is not a homology sphere; the value of d3 then
/// depends on c_1 being torsion on the boundary.
std::optional<std::string> d3_caveat(const FramedLinkPresentation& link);

}  // namespace exostein
