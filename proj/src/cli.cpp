#include "exostein/cli.hpp"

#include <algorithm>
#include <functional>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include <CLI11.hpp>

#include "exostein/obstruct.hpp"
#include "exostein/serialize.hpp"

namespace exostein::cli {

namespace {

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class Format { text, json, csv };

struct Range {
  std::int64_t first = 0;
  std::int64_t last = 0;

  std::vector<std::int64_t> values() const {
    std::vector<std::int64_t> out;
    for (std::int64_t v = first; v <= last; ++v) out.push_back(v);
    return out;
  }
};

// "a..b", inclusive on both ends.
Range parse_range(const std::string& text) {
  const auto dots = text.find("..");
  if (dots == std::string::npos) throw UsageError("range must look like a..b, got '" + text + "'");
  try {
    Range r{to_int64(parse_integer(text.substr(0, dots))),
            to_int64(parse_integer(text.substr(dots + 2)))};
    if (r.first > r.last) throw UsageError("empty range '" + text + "'");
    return r;
  } catch (const std::invalid_argument&) {
    throw UsageError("range must look like a..b, got '" + text + "'");
  }
}

std::string matrix_text(const IntMatrix& m) {
  std::string s = "[";
  for (Index i = 0; i < m.rows(); ++i) {
    s += i ? ", [" : "[";
    for (Index j = 0; j < m.cols(); ++j) s += (j ? ", " : "") + m(i, j).str();
    s += "]";
  }
  return s + "]";
}

std::string vector_text(const IntVector& v) {
  std::string s = "(";
  for (Index i = 0; i < v.size(); ++i) s += (i ? ", " : "") + v(i).str();
  return s + ")";
}

std::string labels_text(const QuadraticForm& f) {
  std::string s = "(";
  for (std::size_t i = 0; i < f.labels().size(); ++i) s += (i ? ", " : "") + f.labels()[i];
  return s + ")";
}

const char* bool_text(bool b) { return b ? "true" : "false"; }

// key,value rows for results that are not naturally tabular.
void write_kv_csv(std::ostream& out, const std::vector<std::pair<std::string, std::string>>& rows) {
  out << "key,value\n";
  for (const auto& [k, v] : rows) out << k << ',' << v << '\n';
}

QuadraticForm load_form(const std::string& path) {
  return load_json_file(path).get<QuadraticForm>();
}

FramedLinkPresentation load_link(const std::string& path) {
  return load_json_file(path).get<FramedLinkPresentation>();
}

struct Session {
  std::ostream& out;
  std::ostream& err;
  Format format = Format::text;
};

int form_classify(Session& s, const std::string& path) {
  const auto form = load_form(path);
  const auto c = classify(form);
  switch (s.format) {
    case Format::json:
      s.out << dump(Json(c));
      break;
    case Format::csv:
      s.out << "rank,signature,parity,definiteness,unimodular\n"
            << c.rank << ',' << c.signature << ',' << to_string(c.parity) << ','
            << to_string(c.definiteness) << ',' << bool_text(c.unimodular) << '\n';
      break;
    case Format::text:
      s.out << "rank: " << c.rank << "\nsignature: " << c.signature
            << "\nparity: " << to_string(c.parity)
            << "\ndefiniteness: " << to_string(c.definiteness)
            << "\nunimodular: " << bool_text(c.unimodular) << '\n';
      break;
  }
  return kExitOk;
}

int form_iso(Session& s, const std::string& a, const std::string& b, long bound) {
  const auto result = is_isomorphic(load_form(a), load_form(b), bound);
  switch (s.format) {
    case Format::json:
      s.out << dump(Json{{"isomorphic", to_string(result)}, {"bound", bound}});
      break;
    case Format::csv:
      write_kv_csv(s.out, {{"isomorphic", to_string(result)}, {"bound", std::to_string(bound)}});
      break;
    case Format::text:
      s.out << to_string(result) << '\n';
      break;
  }
  return kExitOk;
}

int family_x(Session& s, const std::vector<std::int64_t>& ps) {
  std::vector<LogTransformFamilyMember> members;
  for (auto p : ps) members.push_back(x_member(p));
  switch (s.format) {
    case Format::json:
      s.out << dump(Json(members));
      break;
    case Format::csv:
      s.out << "p,name,r_square,s_shift,parity,s_square,c1_s,normalized_d\n";
      for (const auto& m : members) {
        const auto& f = m.manifold.form;
        s.out << m.p << ',' << m.manifold.name << ',' << f.gram()(1, 1).str() << ','
              << m.s_class(0).str() << ',' << to_string(parity(f)) << ','
              << pairing(f, m.s_class, m.s_class).str() << ','
              << chern_eval(m.manifold, m.s_class).str() << ','
              << normalized_form(m).gram()(1, 1).str() << '\n';
      }
      break;
    case Format::text:
      for (const auto& m : members) {
        const auto& f = m.manifold.form;
        const auto nf = normalized_form(m);
        s.out << m.manifold.name << ": form " << matrix_text(f.gram()) << " in basis "
              << labels_text(f) << ", c1 = " << vector_text(m.manifold.c1) << '\n'
              << "  distinguished class " << vector_text(m.s_class)
              << ", square " << pairing(f, m.s_class, m.s_class).str() << ", c1 "
              << chern_eval(m.manifold, m.s_class).str() << ", " << to_string(parity(f)) << '\n'
              << "  normalized form " << matrix_text(nf.gram()) << " in basis "
              << labels_text(nf) << '\n';
      }
      break;
  }
  return kExitOk;
}

int lemma_homeo(Session& s, std::int64_t max_p) {
  if (max_p < 0) throw UsageError("--max-p must be nonnegative");
  std::vector<LogTransformFamilyMember> members;
  for (std::int64_t p = 0; p <= max_p; ++p) members.push_back(x_member(p));
  // X (label 0) sits with the odd members.
  auto parity_class = [](std::int64_t p) { return p == 0 ? 1 : p % 2; };

  struct Row {
    std::int64_t p, q;
    HomeoDecision decision;
    bool predicate;
  };
  std::vector<Row> rows;
  bool all_agree = true;
  for (const auto& a : members)
    for (const auto& b : members) {
      Row r{a.p, b.p, homeo_decide(a.manifold, b.manifold),
            parity_class(a.p) == parity_class(b.p)};
      all_agree = all_agree && ((r.decision == HomeoDecision::homeomorphic) == r.predicate);
      rows.push_back(r);
    }

  switch (s.format) {
    case Format::json: {
      Json table = Json::array();
      for (const auto& r : rows)
        table.push_back(Json{{"p", r.p},
                             {"q", r.q},
                             {"decision", to_string(r.decision)},
                             {"same_parity", r.predicate},
                             {"agrees", (r.decision == HomeoDecision::homeomorphic) == r.predicate}});
      s.out << dump(Json{{"max_p", max_p}, {"rows", std::move(table)}, {"all_agree", all_agree}});
      break;
    }
    case Format::csv:
      s.out << "p,q,decision,same_parity\n";
      for (const auto& r : rows)
        s.out << r.p << ',' << r.q << ',' << to_string(r.decision) << ','
              << bool_text(r.predicate) << '\n';
      break;
    case Format::text: {
      s.out << "Homeomorphism table (label 0 is X; '~' homeomorphic, 'x' not, '?' inapplicable)\n";
      s.out << "     ";
      for (const auto& m : members) {
        s.out.width(4);
        s.out << m.p;
      }
      s.out << '\n';
      std::size_t k = 0;
      for (const auto& a : members) {
        s.out.width(4);
        s.out << a.p << ' ';
        for (std::size_t j = 0; j < members.size(); ++j, ++k) {
          const auto d = rows[k].decision;
          s.out << "   "
                << (d == HomeoDecision::homeomorphic       ? '~'
                    : d == HomeoDecision::not_homeomorphic ? 'x'
                                                           : '?');
        }
        s.out << '\n';
      }
      s.out << "agrees with parity criterion: " << bool_text(all_agree) << '\n';
      break;
    }
  }
  return all_agree ? kExitOk : kExitCheckFailed;
}

int lemma_basis_restriction(Session& s, std::int64_t p) {
  if (p < 0) throw UsageError("--p must be nonnegative");
  const auto member = x_member(p);
  const auto& form = member.manifold.form;
  const Integer c = pairing(form, member.s_class, member.s_class);
  const auto solutions = solve_square(form, c);
  const auto normalized = normalized_form(member);
  const auto normalized_solutions = solve_square(normalized, c);
  const bool holds = class_rigidity(member);

  std::vector<IntVector> expected{member.s_class, IntVector(-member.s_class)};
  std::sort(expected.begin(), expected.end(), lexicographic_less);

  switch (s.format) {
    case Format::json:
      s.out << dump(Json{{"p", p},
                         {"square", c},
                         {"complete", solutions.complete},
                         {"basis", form.labels()},
                         {"solutions", solutions.vectors},
                         {"expected", expected},
                         {"normalized_basis", normalized.labels()},
                         {"normalized_solutions", normalized_solutions.vectors},
                         {"holds", holds}});
      break;
    case Format::csv:
      s.out << "basis,a,b\n";
      for (const auto& v : solutions.vectors)
        s.out << "original," << v(0).str() << ',' << v(1).str() << '\n';
      for (const auto& v : normalized_solutions.vectors)
        s.out << "normalized," << v(0).str() << ',' << v(1).str() << '\n';
      break;
    case Format::text:
      s.out << member.manifold.name << ": classes v with v.v = " << c.str()
            << (solutions.complete ? " (complete)" : " (bounded search only)") << '\n';
      s.out << "  in basis " << labels_text(form) << ":";
      for (const auto& v : solutions.vectors) s.out << ' ' << vector_text(v);
      s.out << "\n  in basis " << labels_text(normalized) << ":";
      for (const auto& v : normalized_solutions.vectors) s.out << ' ' << vector_text(v);
      s.out << "\n  equals +-S: " << bool_text(holds) << '\n';
      break;
  }
  return holds ? kExitOk : kExitCheckFailed;
}

int genus_bound(Session& s, Parity parity, const Range& range) {
  if (range.first < 1) throw UsageError("q values must be positive");
  const bool odd = parity == Parity::odd;
  struct Row {
    std::int64_t q, p;
    GenusBound bound;
  };
  std::vector<Row> rows;
  for (auto q : range.values()) {
    const std::int64_t p = odd ? 2 * q - 1 : 2 * q;
    const auto m = x_family(p);
    rows.push_back({q, p, adjunction_lower_bound(m.manifold, m.s_class)});
  }
  switch (s.format) {
    case Format::json: {
      Json table = Json::array();
      for (const auto& r : rows)
        table.push_back(Json{{"q", r.q}, {"p", r.p}, {"genus_bound", r.bound}});
      s.out << dump(Json{{"parity", to_string(parity)}, {"rows", std::move(table)}});
      break;
    }
    case Format::csv:
      s.out << "q,p,self_intersection,c1_pairing,lower_bound\n";
      for (const auto& r : rows)
        s.out << r.q << ',' << r.p << ',' << r.bound.self_intersection.str() << ','
              << r.bound.c1_pairing.str() << ',' << r.bound.lower_bound.str() << '\n';
      break;
    case Format::text:
      for (const auto& r : rows)
        s.out << "q = " << r.q << ", p = " << r.p << ": S.S = " << r.bound.self_intersection.str()
              << ", c1(S) = " << r.bound.c1_pairing.str()
              << ", genus >= " << r.bound.lower_bound.str() << '\n';
      break;
  }
  return kExitOk;
}

int certificate(Session& s, Parity parity, const Range& range) {
  if (range.first < 1) throw UsageError("q values must be positive");
  const auto cert = infinitude_report(parity, range.values());
  switch (s.format) {
    case Format::json:
      s.out << dump(Json(cert));
      break;
    case Format::csv:
      s.out << render_csv(cert);
      break;
    case Format::text:
      s.out << render_text(cert);
      break;
  }
  return cert.conclusion ? kExitOk : kExitCheckFailed;
}

int d3_command(Session& s, const std::string& path) {
  const auto link = load_link(path);
  const Rational value = d3(link);
  const Rational c2 = c1_square(link);
  const auto caveat = d3_caveat(link);
  if (caveat) s.err << "warning: " << *caveat << '\n';
  const auto sigma = signature(link.linking);
  const auto chi = 1 + link.size();
  switch (s.format) {
    case Format::json:
      s.out << dump(Json{{"d3", value},
                         {"c1_square", c2},
                         {"signature", sigma},
                         {"euler", chi},
                         {"boundary_homology_sphere", !caveat.has_value()}});
      break;
    case Format::csv:
      write_kv_csv(s.out, {{"d3", to_string(value)},
                           {"c1_square", to_string(c2)},
                           {"signature", std::to_string(sigma)},
                           {"euler", std::to_string(chi)}});
      break;
    case Format::text:
      s.out << to_string(value) << '\n';
      break;
  }
  return kExitOk;
}

int print_group(Session& s, const GroupDescriptor& g) {
  switch (s.format) {
    case Format::json:
      s.out << dump(Json(g));
      break;
    case Format::csv: {
      std::string torsion;
      for (const auto& t : g.torsion) torsion += (torsion.empty() ? "" : ";") + t.str();
      write_kv_csv(s.out, {{"free_rank", std::to_string(g.free_rank)}, {"torsion", torsion}});
      break;
    }
    case Format::text:
      s.out << describe(g) << '\n';
      break;
  }
  return kExitOk;
}

int mapping_class_fp(Session& s, std::int64_t p, std::optional<std::int64_t> compose_with,
                     bool check_stabilizes) {
  if (p < 0) throw UsageError("--p must be nonnegative");
  if (compose_with && *compose_with < 0) throw UsageError("--compose must be nonnegative");
  TorusMappingClass f = fp_matrix(p);
  std::optional<bool> composition_ok;
  if (compose_with) {
    f = compose(f, fp_matrix(*compose_with));
    composition_ok = f == fp_matrix(p + *compose_with);
  }
  std::optional<bool> stabilizes;
  if (check_stabilizes) stabilizes = stabilizes_summand(f);
  const Integer det = determinant(f.matrix());

  switch (s.format) {
    case Format::json: {
      Json j{{"p", p}, {"matrix", f}, {"determinant", det}};
      if (compose_with) {
        j["composed_with"] = *compose_with;
        j["equals_f_sum"] = *composition_ok;
      }
      if (stabilizes) j["stabilizes_summand"] = *stabilizes;
      s.out << dump(j);
      break;
    }
    case Format::csv: {
      std::vector<std::pair<std::string, std::string>> rows{
          {"p", std::to_string(p)}, {"determinant", det.str()}};
      for (Index i = 0; i < 3; ++i)
        for (Index j = 0; j < 3; ++j)
          rows.emplace_back("m" + std::to_string(i + 1) + std::to_string(j + 1),
                            f.matrix()(i, j).str());
      if (compose_with) {
        rows.emplace_back("composed_with", std::to_string(*compose_with));
        rows.emplace_back("equals_f_sum", bool_text(*composition_ok));
      }
      if (stabilizes) rows.emplace_back("stabilizes_summand", bool_text(*stabilizes));
      write_kv_csv(s.out, rows);
      break;
    }
    case Format::text:
      s.out << (compose_with ? "f_" + std::to_string(p) + " o f_" + std::to_string(*compose_with)
                             : "f_" + std::to_string(p))
            << " = " << matrix_text(f.matrix()) << " (acting on row vectors), det " << det.str()
            << '\n';
      if (compose_with)
        s.out << "equals f_" << p + *compose_with << ": " << bool_text(*composition_ok) << '\n';
      if (stabilizes) s.out << "stabilizes Z+Z+0: " << bool_text(*stabilizes) << '\n';
      break;
  }
  const bool ok = composition_ok.value_or(true) && stabilizes.value_or(true);
  return ok ? kExitOk : kExitCheckFailed;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact verification of exotic Stein filling computations", "exostein"};
  app.fallthrough();
  app.require_subcommand(1);

  std::string format_name = "text";
  app.add_option("--output", format_name, "Output format")
      ->check(CLI::IsMember({"text", "json", "csv"}));

  std::function<int(Session&)> action;

  // form
  auto* form = app.add_subcommand("form", "Integral quadratic forms");
  form->require_subcommand(1);
  std::string form_file, form_file_b;
  long iso_bound = kDefaultIsoBound;
  auto* classify_cmd = form->add_subcommand("classify", "Rank, signature, parity, definiteness");
  classify_cmd->add_option("file", form_file, "Form JSON")->required();
  classify_cmd->callback([&] { action = [&](Session& s) { return form_classify(s, form_file); }; });
  auto* iso_cmd = form->add_subcommand("iso", "Decide isomorphism of two forms");
  iso_cmd->add_option("fileA", form_file, "First form JSON")->required();
  iso_cmd->add_option("fileB", form_file_b, "Second form JSON")->required();
  iso_cmd->add_option("--bound", iso_bound, "Entry bound for basis-change search")
      ->check(CLI::NonNegativeNumber);
  iso_cmd->callback(
      [&] { action = [&](Session& s) { return form_iso(s, form_file, form_file_b, iso_bound); }; });

  // family
  auto* family = app.add_subcommand("family", "Parametric families");
  family->require_subcommand(1);
  std::optional<std::int64_t> family_p;
  std::string family_range;
  auto* family_x_cmd = family->add_subcommand("x", "Log-transform family X_p (p = 0 is X)");
  auto* family_p_opt = family_x_cmd->add_option("--p", family_p, "Single member");
  auto* family_range_opt =
      family_x_cmd->add_option("--p-range", family_range, "Inclusive range a..b");
  family_p_opt->excludes(family_range_opt);
  family_x_cmd->callback([&] {
    action = [&](Session& s) {
      std::vector<std::int64_t> ps;
      if (family_p)
        ps = {*family_p};
      else if (!family_range.empty())
        ps = parse_range(family_range).values();
      else
        throw UsageError("family x needs --p or --p-range");
      if (ps.front() < 0) throw UsageError("family labels must be nonnegative");
      return family_x(s, ps);
    };
  });

  // lemma
  auto* lemma = app.add_subcommand("lemma", "Lemma-by-lemma verification");
  lemma->require_subcommand(1);
  std::int64_t max_p = 0;
  auto* homeo_cmd = lemma->add_subcommand("homeo", "Homeomorphism table of the X_p family");
  homeo_cmd->add_option("--max-p", max_p, "Largest p")->required();
  homeo_cmd->callback([&] { action = [&](Session& s) { return lemma_homeo(s, max_p); }; });
  std::int64_t restriction_p = 0;
  auto* restriction_cmd =
      lemma->add_subcommand("basis-restriction", "Classes of the distinguished square");
  restriction_cmd->add_option("--p", restriction_p, "Family member")->required();
  restriction_cmd->callback(
      [&] { action = [&](Session& s) { return lemma_basis_restriction(s, restriction_p); }; });

  // genus-bound, certificate
  std::string parity_name, q_range;
  auto* genus_cmd = app.add_subcommand("genus-bound", "Adjunction genus bounds of S_p");
  genus_cmd->add_option("--parity", parity_name)->required()->check(CLI::IsMember({"odd", "even"}));
  genus_cmd->add_option("--q-range", q_range, "Inclusive range a..b")->required();
  genus_cmd->callback([&] {
    action = [&](Session& s) {
      return genus_bound(s, parse_parity(parity_name), parse_range(q_range));
    };
  });
  auto* cert_cmd = app.add_subcommand("certificate", "Infinitely-many-smooth-structures certificate");
  cert_cmd->add_option("--parity", parity_name)->required()->check(CLI::IsMember({"odd", "even"}));
  cert_cmd->add_option("--q-range", q_range, "Inclusive range a..b")->required();
  cert_cmd->callback([&] {
    action = [&](Session& s) {
      return certificate(s, parse_parity(parity_name), parse_range(q_range));
    };
  });

  // d3
  std::string link_file;
  auto* d3_cmd = app.add_subcommand("d3", "d3 invariant of a Stein handlebody");
  d3_cmd->add_option("link-file", link_file, "Framed link JSON")->required();
  d3_cmd->callback([&] { action = [&](Session& s) { return d3_command(s, link_file); }; });

  // homology
  auto* homology = app.add_subcommand("homology", "First homology groups");
  homology->require_subcommand(1);
  auto* boundary_cmd = homology->add_subcommand("boundary", "H_1 of the boundary 3-manifold");
  boundary_cmd->add_option("link-file", link_file, "Framed link JSON")->required();
  boundary_cmd->callback([&] {
    action = [&](Session& s) {
      return print_group(s, boundary_first_homology(load_link(link_file)));
    };
  });
  std::int64_t v_p = 0;
  auto* v_cmd = homology->add_subcommand("v-family", "H_1(V_p)");
  v_cmd->add_option("--p", v_p, "p >= 1")->required();
  v_cmd->callback([&] {
    action = [&](Session& s) {
      if (v_p < 1) throw UsageError("--p must be positive");
      return print_group(s, v_family_homology(v_p));
    };
  });

  // mapping-class
  auto* mapping = app.add_subcommand("mapping-class", "Mapping classes of T^3");
  mapping->require_subcommand(1);
  std::int64_t fp_p = 0;
  std::optional<std::int64_t> compose_q;
  bool check_stabilizes = false;
  auto* fp_cmd = mapping->add_subcommand("fp", "The class f_p");
  fp_cmd->add_option("--p", fp_p, "p >= 0")->required();
  fp_cmd->add_option("--compose", compose_q, "Compose with f_q");
  fp_cmd->add_flag("--check-stabilizes", check_stabilizes, "Check Z+Z+0 is preserved");
  fp_cmd->callback([&] {
    action = [&](Session& s) { return mapping_class_fp(s, fp_p, compose_q, check_stabilizes); };
  });

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitUsage;
  }

  Session session{out, err};
  session.format = format_name == "json" ? Format::json
                   : format_name == "csv" ? Format::csv
                                          : Format::text;
  if (!action) {
    err << "no command given\n";
    return kExitUsage;
  }
  // Render into a buffer so a failing command never leaves partial output.
  std::ostringstream buffer;
  Session buffered{buffer, err, session.format};
  try {
    const int code = action(buffered);
    out << buffer.str();
    return code;
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
  } catch (const Json::exception& e) {
    err << "input error: " << e.what() << '\n';
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
  }
  return kExitUsage;
}

}  // namespace exostein::cli
