#include "exostein/serialize.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace nlohmann {

using exostein::Index;

void adl_serializer<exostein::Integer>::to_json(json& j, const exostein::Integer& value) {
  j = value.str();
}

void adl_serializer<exostein::Integer>::from_json(const json& j, exostein::Integer& value) {
  if (j.is_string())
    value = exostein::parse_integer(j.get<std::string>());
  else if (j.is_number_integer())
    value = exostein::Integer(j.get<long long>());
  else if (j.is_number_unsigned())
    value = exostein::Integer(j.get<unsigned long long>());
  else
    throw std::invalid_argument("expected an integer or decimal string, got " + j.dump());
}

void adl_serializer<exostein::Rational>::to_json(json& j, const exostein::Rational& value) {
  j = exostein::to_string(value);
}

void adl_serializer<exostein::Rational>::from_json(const json& j, exostein::Rational& value) {
  if (j.is_string())
    value = exostein::parse_rational(j.get<std::string>());
  else
    value = exostein::Rational(j.get<exostein::Integer>());
}

void adl_serializer<exostein::IntMatrix>::to_json(json& j, const exostein::IntMatrix& m) {
  j = json::array();
  for (Index i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (Index k = 0; k < m.cols(); ++k) row.push_back(m(i, k));
    j.push_back(std::move(row));
  }
}

void adl_serializer<exostein::IntMatrix>::from_json(const json& j, exostein::IntMatrix& m) {
  if (!j.is_array()) throw std::invalid_argument("matrix must be an array of rows");
  const auto rows = static_cast<Index>(j.size());
  const auto cols = rows == 0 ? Index{0} : static_cast<Index>(j.front().size());
  m.resize(rows, cols);
  for (Index i = 0; i < rows; ++i) {
    const auto& row = j[static_cast<std::size_t>(i)];
    if (!row.is_array() || static_cast<Index>(row.size()) != cols)
      throw std::invalid_argument("matrix rows must be arrays of equal length");
    for (Index k = 0; k < cols; ++k) m(i, k) = row[static_cast<std::size_t>(k)].get<exostein::Integer>();
  }
}

void adl_serializer<exostein::IntVector>::to_json(json& j, const exostein::IntVector& v) {
  j = json::array();
  for (Index i = 0; i < v.size(); ++i) j.push_back(v(i));
}

void adl_serializer<exostein::IntVector>::from_json(const json& j, exostein::IntVector& v) {
  if (!j.is_array()) throw std::invalid_argument("vector must be an array");
  v.resize(static_cast<Index>(j.size()));
  for (Index i = 0; i < v.size(); ++i) v(i) = j[static_cast<std::size_t>(i)].get<exostein::Integer>();
}

}  // namespace nlohmann

namespace exostein {

void to_json(Json& j, const QuadraticForm& form) {
  j = Json{{"gram", form.gram()}, {"labels", form.labels()}};
}

void from_json(const Json& j, QuadraticForm& form) {
  std::vector<std::string> labels;
  if (j.contains("labels") && !j.at("labels").is_null())
    labels = j.at("labels").get<std::vector<std::string>>();
  form = QuadraticForm(j.at("gram").get<IntMatrix>(), std::move(labels));
}

void to_json(Json& j, const FormClass& c) {
  j = Json{{"rank", c.rank},
           {"signature", c.signature},
           {"parity", to_string(c.parity)},
           {"definiteness", to_string(c.definiteness)},
           {"unimodular", c.unimodular}};
}

void from_json(const Json& j, FormClass& c) {
  c.rank = j.at("rank").get<Index>();
  c.signature = j.at("signature").get<Index>();
  c.parity = parse_parity(j.at("parity").get<std::string>());
  c.definiteness = parse_definiteness(j.at("definiteness").get<std::string>());
  c.unimodular = j.at("unimodular").get<bool>();
}

void to_json(Json& j, const FramedLinkPresentation& link) {
  j = Json{{"linking", link.linking}, {"rot", link.rot}};
  j["tb"] = link.tb ? Json(*link.tb) : Json(nullptr);
}

void from_json(const Json& j, FramedLinkPresentation& link) {
  std::optional<IntVector> tb;
  if (j.contains("tb") && !j.at("tb").is_null()) tb = j.at("tb").get<IntVector>();
  link = FramedLinkPresentation(j.at("linking").get<IntMatrix>(), j.at("rot").get<IntVector>(),
                                std::move(tb));
}

void to_json(Json& j, const AlgebraicFourManifold& m) {
  j = Json{{"name", m.name},
           {"form", m.form},
           {"c1", m.c1},
           {"euler", m.euler},
           {"sig", m.sig},
           {"simply_connected", m.simply_connected},
           {"boundary_homology_sphere", m.boundary_homology_sphere},
           {"stein", m.stein},
           {"contact_label", m.contact_label},
           {"notes", m.notes}};
}

void from_json(const Json& j, AlgebraicFourManifold& m) {
  m.name = j.at("name").get<std::string>();
  m.form = j.at("form").get<QuadraticForm>();
  m.c1 = j.at("c1").get<IntVector>();
  m.euler = j.at("euler").get<std::int64_t>();
  m.sig = j.at("sig").get<std::int64_t>();
  m.simply_connected = j.at("simply_connected").get<bool>();
  m.boundary_homology_sphere = j.at("boundary_homology_sphere").get<bool>();
  m.stein = j.value("stein", false);
  m.contact_label = j.value("contact_label", std::string{});
  m.notes = j.value("notes", std::vector<std::string>{});
  m.validate();
}

void to_json(Json& j, const LogTransformFamilyMember& member) {
  j = Json{{"p", member.p},
           {"manifold", member.manifold},
           {"s_class", member.s_class},
           {"normalized_form", normalized_form(member)}};
}

void from_json(const Json& j, LogTransformFamilyMember& member) {
  member.p = j.at("p").get<std::int64_t>();
  member.manifold = j.at("manifold").get<AlgebraicFourManifold>();
  member.s_class = j.at("s_class").get<IntVector>();
  if (member.s_class.size() != member.manifold.form.rank())
    throw std::invalid_argument("s_class length does not match the form rank");
}

void to_json(Json& j, const TorusMappingClass& f) { j = f.matrix(); }

void from_json(const Json& j, TorusMappingClass& f) { f = TorusMappingClass(j.get<IntMatrix>()); }

void to_json(Json& j, const GroupDescriptor& g) {
  j = Json{{"free_rank", g.free_rank}, {"torsion", g.torsion}, {"description", describe(g)}};
}

void from_json(const Json& j, GroupDescriptor& g) {
  g.free_rank = j.at("free_rank").get<Index>();
  g.torsion = j.at("torsion").get<std::vector<Integer>>();
}

void to_json(Json& j, const GenusBound& b) {
  j = Json{{"class_coords", b.class_coords},
           {"self_intersection", b.self_intersection},
           {"c1_pairing", b.c1_pairing},
           {"lower_bound", b.lower_bound}};
}

void from_json(const Json& j, GenusBound& b) {
  b.class_coords = j.at("class_coords").get<IntVector>();
  b.self_intersection = j.at("self_intersection").get<Integer>();
  b.c1_pairing = j.at("c1_pairing").get<Integer>();
  b.lower_bound = j.at("lower_bound").get<Integer>();
}

void to_json(Json& j, const InfinitudeCertificate& cert) {
  Json entries = Json::array();
  for (const auto& e : cert.entries)
    entries.push_back(Json{{"q", e.q},
                           {"p", e.p},
                           {"form_class", e.form_class},
                           {"genus_bound", e.bound},
                           {"rigid", e.rigid}});
  j = Json{{"family_label", cert.family_label},
           {"parity", to_string(cert.parity)},
           {"parameters", cert.parameters()},
           {"bounds", cert.bounds()},
           {"members", std::move(entries)},
           {"bounds_strictly_increasing", cert.bounds_strictly_increasing},
           {"pairwise_homeomorphic", cert.pairwise_homeomorphic},
           {"all_rigid", cert.all_rigid},
           {"class_rigidity_note", cert.class_rigidity_note},
           {"argument", cert.argument},
           {"conclusion", cert.conclusion}};
}

void from_json(const Json& j, InfinitudeCertificate& cert) {
  cert.family_label = j.at("family_label").get<std::string>();
  cert.parity = parse_parity(j.at("parity").get<std::string>());
  cert.entries.clear();
  for (const auto& e : j.at("members")) {
    CertificateEntry entry;
    entry.q = e.at("q").get<std::int64_t>();
    entry.p = e.at("p").get<std::int64_t>();
    entry.form_class = e.at("form_class").get<FormClass>();
    entry.bound = e.at("genus_bound").get<GenusBound>();
    entry.rigid = e.at("rigid").get<bool>();
    cert.entries.push_back(std::move(entry));
  }
  cert.bounds_strictly_increasing = j.at("bounds_strictly_increasing").get<bool>();
  cert.pairwise_homeomorphic = j.at("pairwise_homeomorphic").get<bool>();
  cert.all_rigid = j.at("all_rigid").get<bool>();
  cert.class_rigidity_note = j.at("class_rigidity_note").get<std::string>();
  cert.argument = j.at("argument").get<std::vector<std::string>>();
  cert.conclusion = j.at("conclusion").get<bool>();
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

Json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::stringstream buffer;
  buffer << in.rdbuf();
  try {
    return Json::parse(buffer.str());
  } catch (const Json::parse_error& e) {
    throw std::runtime_error(path + ": " + e.what());
  }
}

}  // namespace exostein
