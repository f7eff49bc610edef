#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "exostein/surgery.hpp"

namespace exostein {

/// Lower bound on the genus of a smoothly embedded closed surface
/// representing a class in a Stein manifold, from 2g - 2 >= v.v + |c1(v)|.
struct GenusBound {
  IntVector class_coords;
  Integer self_intersection;
  Integer c1_pairing;
  Integer lower_bound;  // max(0, ceil((|c1_pairing| + self_intersection + 2) / 2))
};

/// Throws InessentialClassError for v = 0 and NotSteinError unless the
/// manifold carries the Stein flag.
GenusBound adjunction_lower_bound(const AlgebraicFourManifold& m, const IntVector& v);

enum class HomeoDecision { homeomorphic, not_homeomorphic, inapplicable };
const char* to_string(HomeoDecision d);

/// Freedman: simply connected, homology-sphere boundary, isomorphic forms.
HomeoDecision homeo_decide(const AlgebraicFourManifold& a, const AlgebraicFourManifold& b);

/// Every class with the square of the distinguished class is +-s_class.
/// Requires an exact (complete) solution set.
bool class_rigidity(const LogTransformFamilyMember& member);

struct CertificateEntry {
  std::int64_t q = 0;
  std::int64_t p = 0;
  FormClass form_class;
  GenusBound bound;
  bool rigid = false;
};

struct InfinitudeCertificate {
  std::string family_label;
  Parity parity = Parity::odd;
  std::vector<CertificateEntry> entries;
  bool bounds_strictly_increasing = false;
  bool pairwise_homeomorphic = false;
  bool all_rigid = false;
  std::string class_rigidity_note;
  std::vector<std::string> argument;
  bool conclusion = false;

  std::vector<std::int64_t> parameters() const;
  std::vector<Integer> bounds() const;
};

/// Builds X_{2q-1} (odd) or X_{2q} (even) for each q and certifies that the
/// family meets infinitely many diffeomorphism types among homeomorphic
/// manifolds.  `q_range` must be nonempty, positive and strictly increasing.
InfinitudeCertificate infinitude_report(Parity parity, const std::vector<std::int64_t>& q_range);

std::string render_text(const InfinitudeCertificate& cert);
std::string render_csv(const InfinitudeCertificate& cert);

}  // namespace exostein
