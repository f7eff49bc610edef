#include "exostein/obstruct.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace exostein {

GenusBound adjunction_lower_bound(const AlgebraicFourManifold& m, const IntVector& v) {
  if (v.size() != m.form.rank())
    throw std::invalid_argument("class length does not match the rank of H_2");
  if (v.isZero()) throw InessentialClassError();
  if (!m.stein) throw NotSteinError(m.name);

  GenusBound out;
  out.class_coords = v;
  out.self_intersection = pairing(m.form, v, v);
  out.c1_pairing = chern_eval(m, v);
  const Integer twice = abs(out.c1_pairing) + out.self_intersection + 2;
  out.lower_bound = twice > 0 ? Integer((twice + 1) / 2) : Integer(0);
  return out;
}

const char* to_string(HomeoDecision d) {
  switch (d) {
    case HomeoDecision::homeomorphic:
      return "homeomorphic";
    case HomeoDecision::not_homeomorphic:
      return "not_homeomorphic";
    case HomeoDecision::inapplicable:
      return "inapplicable";
  }
  return "?";
}

HomeoDecision homeo_decide(const AlgebraicFourManifold& a, const AlgebraicFourManifold& b) {
  if (!a.simply_connected || !b.simply_connected) return HomeoDecision::inapplicable;
  if (!a.boundary_homology_sphere || !b.boundary_homology_sphere)
    return HomeoDecision::inapplicable;
  switch (is_isomorphic(a.form, b.form)) {
    case Isomorphism::yes:
      return HomeoDecision::homeomorphic;
    case Isomorphism::no:
      return HomeoDecision::not_homeomorphic;
    case Isomorphism::undecided:
      break;
  }
  return HomeoDecision::inapplicable;
}

bool class_rigidity(const LogTransformFamilyMember& member) {
  const auto& form = member.manifold.form;
  const auto solutions = solve_square(form, pairing(form, member.s_class, member.s_class));
  if (!solutions.complete) return false;
  std::vector<IntVector> expected{member.s_class, IntVector(-member.s_class)};
  std::sort(expected.begin(), expected.end(), lexicographic_less);
  if (solutions.vectors.size() != expected.size()) return false;
  for (std::size_t i = 0; i < expected.size(); ++i)
    if (solutions.vectors[i] != expected[i]) return false;
  return true;
}

std::vector<std::int64_t> InfinitudeCertificate::parameters() const {
  std::vector<std::int64_t> out;
  for (const auto& e : entries) out.push_back(e.q);
  return out;
}

std::vector<Integer> InfinitudeCertificate::bounds() const {
  std::vector<Integer> out;
  for (const auto& e : entries) out.push_back(e.bound.lower_bound);
  return out;
}

InfinitudeCertificate infinitude_report(Parity parity, const std::vector<std::int64_t>& q_range) {
  if (q_range.empty()) throw std::invalid_argument("q range is empty");
  for (std::size_t i = 0; i < q_range.size(); ++i) {
    if (q_range[i] < 1) throw std::invalid_argument("q values must be positive");
    if (i > 0 && q_range[i] <= q_range[i - 1])
      throw std::invalid_argument("q values must be strictly increasing");
  }

  const bool odd = parity == Parity::odd;
  InfinitudeCertificate cert;
  cert.parity = parity;
  cert.family_label = odd ? "X_{2q-1}" : "X_{2q}";

  std::vector<LogTransformFamilyMember> members;
  for (std::int64_t q : q_range) {
    const std::int64_t p = odd ? 2 * q - 1 : 2 * q;
    auto member = x_family(p);
    CertificateEntry entry;
    entry.q = q;
    entry.p = p;
    entry.form_class = classify(member.manifold.form);
    entry.bound = adjunction_lower_bound(member.manifold, member.s_class);
    entry.rigid = class_rigidity(member);
    cert.entries.push_back(std::move(entry));
    members.push_back(std::move(member));
  }

  cert.bounds_strictly_increasing = true;
  for (std::size_t i = 1; i < cert.entries.size(); ++i)
    if (cert.entries[i].bound.lower_bound <= cert.entries[i - 1].bound.lower_bound)
      cert.bounds_strictly_increasing = false;

  cert.all_rigid = std::all_of(cert.entries.begin(), cert.entries.end(),
                               [](const CertificateEntry& e) { return e.rigid; });

  cert.pairwise_homeomorphic = true;
  for (std::size_t i = 0; i < members.size() && cert.pairwise_homeomorphic; ++i)
    for (std::size_t j = i + 1; j < members.size(); ++j)
      if (homeo_decide(members[i].manifold, members[j].manifold) !=
          HomeoDecision::homeomorphic) {
        cert.pairwise_homeomorphic = false;
        break;
      }

  const std::string square = odd ? "-2" : "-1";
  cert.class_rigidity_note =
      "In every member the only classes of square " + square +
      " are +-S_p, so any diffeomorphism between members sends S_p to +-S_p' and "
      "preserves the minimal genus of the distinguished class.";

  auto verdict = [](bool ok) { return ok ? " [checked]" : " [FAILED]"; };
  cert.argument = {
      "1. Homeomorphism: every member is simply connected with homology-sphere boundary and "
      "a unimodular indefinite " +
          std::string(odd ? "even" : "odd") +
          " form of rank 2 and signature 0; Freedman's classification makes them pairwise "
          "homeomorphic." +
          verdict(cert.pairwise_homeomorphic),
      "2. Class rigidity: v.v = " + square + " forces v = +-S_p in every member." +
          verdict(cert.all_rigid),
      "3. Genus bounds: the adjunction inequality for Stein manifolds bounds the genus of "
      "S_p from below by " +
          std::string(odd ? "q" : "q + 1") + ", strictly increasing along the family." +
          verdict(cert.bounds_strictly_increasing),
      "4. Finiteness: a diffeomorphism class fixes the minimal genus g of the distinguished "
      "class (2), and every member whose bound exceeds g lies outside it (3). Each "
      "diffeomorphism class therefore contains finitely many members, so the family "
      "realizes infinitely many diffeomorphism types.",
  };
  cert.conclusion = cert.entries.size() >= 2 && cert.bounds_strictly_increasing &&
                    cert.all_rigid && cert.pairwise_homeomorphic;
  if (cert.entries.size() < 2)
    cert.argument.push_back("A single member certifies nothing; at least two are required.");
  return cert;
}

std::string render_text(const InfinitudeCertificate& cert) {
  std::ostringstream os;
  os << "Infinitude certificate for " << cert.family_label << " (" << to_string(cert.parity)
     << " family)\n\n";
  os << "   q    p  S.S  c1(S)  genus>=  rigid\n";
  for (const auto& e : cert.entries) {
    os.width(4);
    os << e.q << ' ';
    os.width(4);
    os << e.p << ' ';
    os.width(4);
    os << e.bound.self_intersection.str() << ' ';
    os.width(6);
    os << e.bound.c1_pairing.str() << ' ';
    os.width(8);
    os << e.bound.lower_bound.str() << "  " << (e.rigid ? "yes" : "no") << '\n';
  }
  os << '\n' << cert.class_rigidity_note << "\n\n";
  for (const auto& line : cert.argument) os << line << '\n';
  os << "\nConclusion: " << (cert.conclusion ? "true" : "false") << '\n';
  return os.str();
}

std::string render_csv(const InfinitudeCertificate& cert) {
  std::ostringstream os;
  os << "p,q,form_parity,rank,signature,definiteness,unimodular,lower_bound,rigidity\n";
  for (const auto& e : cert.entries) {
    os << e.p << ',' << e.q << ',' << to_string(e.form_class.parity) << ','
       << e.form_class.rank << ',' << e.form_class.signature << ','
       << to_string(e.form_class.definiteness) << ','
       << (e.form_class.unimodular ? "true" : "false") << ',' << e.bound.lower_bound.str()
       << ',' << (e.rigid ? "true" : "false") << '\n';
  }
  return os.str();
}

}  // namespace exostein
