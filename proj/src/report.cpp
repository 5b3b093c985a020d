#include "eigenkit/report.hpp"

#include <algorithm>
#include <sstream>

#include "eigenkit/embedding.hpp"
#include "eigenkit/errors.hpp"

namespace eigenkit {

std::string rational_string(const Rational& q) { return q.get_str(); }

Rational parse_rational(const std::string& text) {
  Rational q;
  if (text.empty() || q.set_str(text, 10) != 0 || q.get_den() == 0) {
    throw UsageError("not a rational number: '" + text + "'");
  }
  q.canonicalize();
  return q;
}

Json int_vec_json(const IntVec& v) {
  Json j = Json::array();
  for (int x : v) j.push_back(x);
  return j;
}

Json rat_vec_json(const RatVec& v) {
  Json j = Json::array();
  for (const auto& x : v) j.push_back(rational_string(x));
  return j;
}

namespace {

Json matrix_json(const RatMatrix& m) {
  Json j = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    RatVec row;
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(m(i, c));
    j.push_back(rat_vec_json(row));
  }
  return j;
}

Json group_json(const RootSystem& R) { return Json{{"kind", kind_name(R.kind)}, {"rank", R.rank}}; }

Json integer_json(const Integer& z) {
  if (z.fits_slong_p()) return Json(z.get_si());
  return Json(z.get_str());
}

Integer integer_from_json(const Json& j) {
  if (j.is_number_integer()) return Integer(static_cast<long>(j.get<long long>()));
  return Integer(j.get<std::string>());
}

std::string join_ints(const IntVec& v, const char* sep) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? sep : "") + std::to_string(v[i]);
  return out;
}

}  // namespace

Json root_system_json(const RootSystem& R) {
  Json j;
  j["kind"] = kind_name(R.kind);
  j["rank"] = R.rank;
  j["label"] = R.name();
  Json simple = Json::array();
  for (const auto& a : R.simple_roots) simple.push_back(rat_vec_json(a));
  j["simple_roots"] = simple;
  Json cartan = Json::array();
  for (const auto& row : R.cartan) cartan.push_back(int_vec_json(row));
  j["cartan_matrix"] = cartan;
  Json pos = Json::array();
  for (std::size_t i = 0; i < R.num_positive(); ++i) {
    pos.push_back(Json{{"simple", int_vec_json(R.positive_roots[i])}, {"eps", rat_vec_json(R.positive_roots_eps[i])}});
  }
  j["positive_roots"] = pos;
  Json fw = Json::array();
  for (const auto& w : R.fundamental_weights) fw.push_back(rat_vec_json(w));
  j["fundamental_weights"] = fw;
  j["killing"] = matrix_json(R.killing);
  j["highest_root"] = int_vec_json(R.highest_root);
  Json xs = Json::array();
  for (const auto& x : R.dual_basis) xs.push_back(rat_vec_json(x));
  j["dual_basis"] = xs;
  j["rho"] = rat_vec_json(R.rho);
  return j;
}

Json coset_table_json(const FlagVariety& F) {
  Json j;
  j["group"] = group_json(F.root_system());
  j["parabolic"] = F.parabolic().label();
  j["dim"] = F.dim();
  Json rows = Json::array();
  for (int i = 0; i < static_cast<int>(F.size()); ++i) {
    rows.push_back(Json{{"index", i},
                        {"word", F.word(i)},
                        {"length", F.element(i).length},
                        {"codim", F.codim(i)},
                        {"dual", F.word(F.dual(i))},
                        {"chi", int_vec_json(F.chi(i))}});
  }
  j["basis"] = rows;
  return j;
}

Json cohom_class_json(const CohomClass& c) {
  Json terms = Json::array();
  for (const auto& [i, q] : c.coeffs) {
    terms.push_back(Json{{"word", c.variety->word(i)}, {"codim", c.variety->codim(i)}, {"coefficient", rational_string(q)}});
  }
  return terms;
}

Json ineq_system_json(const IneqSystem& S) {
  Json j;
  j["group"] = group_json(*S.group);
  j["n"] = S.n;
  j["tier"] = tier_name(S.tier);
  Json list = Json::array();
  for (const auto& q : S.inequalities) {
    Json e;
    e["parabolic"] = q.parabolic;
    e["words"] = q.words;
    Json normals = Json::array();
    for (const auto& v : q.normals) normals.push_back(int_vec_json(v));
    e["normals"] = normals;
    e["scale"] = rational_string(q.scale);
    e["multiplicity"] = integer_json(q.multiplicity);
    list.push_back(e);
  }
  j["inequalities"] = list;
  return j;
}

IneqSystem ineq_system_from_json(const Json& j) {
  try {
    IneqSystem S;
    S.group = build_root_system(parse_kind(j.at("group").at("kind").get<std::string>()), j.at("group").at("rank").get<int>());
    S.n = j.at("n").get<int>();
    S.tier = parse_tier(j.at("tier").get<std::string>());
    for (const auto& e : j.at("inequalities")) {
      Inequality q;
      q.parabolic = e.at("parabolic").get<int>();
      q.words = e.at("words").get<std::vector<std::string>>();
      const FlagVarietyPtr F = flag_variety(maximal_parabolic(S.group, q.parabolic));
      for (const auto& w : q.words) q.tuple.push_back(F->index_of_word(w));
      for (const auto& v : e.at("normals")) q.normals.push_back(v.get<IntVec>());
      q.scale = parse_rational(e.at("scale").get<std::string>());
      q.multiplicity = integer_from_json(e.at("multiplicity"));
      if (static_cast<int>(q.normals.size()) != S.n || static_cast<int>(q.words.size()) != S.n) {
        throw UsageError("inequality has the wrong number of slots");
      }
      S.inequalities.push_back(std::move(q));
    }
    return S;
  } catch (const nlohmann::json::exception& e) {
    throw UsageError(std::string("malformed inequality system: ") + e.what());
  }
}

std::string ineq_system_csv(const IneqSystem& S) {
  std::ostringstream out;
  out << "index,parabolic,words,normals,scale,multiplicity\n";
  for (std::size_t i = 0; i < S.inequalities.size(); ++i) {
    const auto& q = S.inequalities[i];
    std::string words, normals;
    for (std::size_t k = 0; k < q.words.size(); ++k) {
      words += (k ? " " : "") + q.words[k];
      normals += (k ? " " : "") + join_ints(q.normals[k], ";");
    }
    out << i << "," << q.parabolic << "," << words << "," << normals << "," << rational_string(q.scale) << ","
        << q.multiplicity.get_str() << "\n";
  }
  return out.str();
}

std::string ineq_system_table(const IneqSystem& S) {
  std::vector<std::vector<std::string>> rows;
  for (std::size_t i = 0; i < S.inequalities.size(); ++i) {
    const auto& q = S.inequalities[i];
    std::string words, normals;
    for (std::size_t k = 0; k < q.words.size(); ++k) {
      words += (k ? " " : "") + q.words[k];
      normals += (k ? " " : "") + ("(" + join_ints(q.normals[k], ",") + ")");
    }
    rows.push_back({std::to_string(i), "P" + std::to_string(q.parabolic), words, normals, rational_string(q.scale),
                    q.multiplicity.get_str()});
  }
  return format_columns({"#", "P", "tuple", "normals (sum <= 0)", "scale", "m"}, rows);
}

std::string format_columns(const std::vector<std::string>& header, const std::vector<std::vector<std::string>>& rows) {
  std::vector<std::size_t> width(header.size());
  for (std::size_t c = 0; c < header.size(); ++c) width[c] = header[c].size();
  for (const auto& r : rows)
    for (std::size_t c = 0; c < r.size() && c < width.size(); ++c) width[c] = std::max(width[c], r[c].size());
  const auto line = [&](const std::vector<std::string>& r) {
    std::string s;
    for (std::size_t c = 0; c < r.size(); ++c) {
      s += r[c];
      if (c + 1 < r.size()) s += std::string(width[c] - r[c].size() + 2, ' ');
    }
    return s + "\n";
  };
  std::string out = line(header);
  for (const auto& r : rows) out += line(r);
  return out;
}

G2F4Tables g2f4_tables(const FlagBuildOptions& opt) {
  const SubsystemEmbedding E = build_embedding(EmbeddingCase::G2inF4);
  const int amb_for_q1 = E.matched_ambient(1), amb_for_q2 = E.matched_ambient(2);
  ensure(amb_for_q1 == 4 && amb_for_q2 == 1, "G2-in-F4 parabolic matching changed");
  const FlagVarietyPtr Q1 = flag_variety(maximal_parabolic(E.sub, 1), opt);
  const FlagVarietyPtr Q2 = flag_variety(maximal_parabolic(E.sub, 2), opt);
  const FlagVarietyPtr P4 = flag_variety(maximal_parabolic(E.ambient, 4), opt);
  const FlagVarietyPtr P1 = flag_variety(maximal_parabolic(E.ambient, 1), opt);
  ensure(Q1->size() == Q2->size(), "G2 coset sizes differ");
  G2F4Tables t;
  for (int i = 0; i < static_cast<int>(Q1->size()); ++i) {
    const int a = P4->index_of(embed_coset(E, Q1->element(i), 1, 4).rep);
    const int b = P1->index_of(embed_coset(E, Q2->element(i), 2, 1).rep);
    ensure(a >= 0 && b >= 0, "embedded coset is not a minimal representative");
    t.cells.push_back({Q1->word(i), Q1->word(Q1->dual(i)), Q2->word(i), Q2->word(Q2->dual(i))});
    t.images.push_back({Q1->word(i), P4->word(a), Q2->word(i), P1->word(b)});
    t.f4.push_back({P4->word(a), P4->word(P4->dual(a)), P1->word(b), P1->word(P1->dual(b))});
  }
  t.duals_commute = verify_dual_commutes(E, 1, 4).all_commute() && verify_dual_commutes(E, 2, 1).all_commute();
  return t;
}

std::string render_g2f4_tables(const G2F4Tables& t) {
  const auto rows = [](const std::vector<std::array<std::string, 4>>& src) {
    std::vector<std::vector<std::string>> out;
    for (const auto& r : src) out.push_back({r[0], r[1], r[2], r[3]});
    return out;
  };
  std::string s;
  s += "G2 Schubert cells\n";
  s += format_columns({"w in W_G2^Q1", "Dual", "w in W_G2^Q2", "Dual"}, rows(t.cells));
  s += "\nG2 to F4 Weyl data\n";
  s += format_columns({"w in W_G2^Q1", "Image in W_F4^P4", "w in W_G2^Q2", "Image in W_F4^P1"}, rows(t.images));
  s += "\nF4 Schubert cells\n";
  s += format_columns({"w in W_F4^P4", "Dual", "w in W_F4^P1", "Dual"}, rows(t.f4));
  return s;
}

Json g2f4_tables_json(const G2F4Tables& t) {
  const auto rows = [](const std::vector<std::array<std::string, 4>>& src, const std::array<const char*, 4>& keys) {
    Json out = Json::array();
    for (const auto& r : src) out.push_back(Json{{keys[0], r[0]}, {keys[1], r[1]}, {keys[2], r[2]}, {keys[3], r[3]}});
    return out;
  };
  Json j;
  j["g2_schubert_cells"] = rows(t.cells, {"q1", "q1_dual", "q2", "q2_dual"});
  j["g2_to_f4"] = rows(t.images, {"q1", "p4_image", "q2", "p1_image"});
  j["f4_schubert_cells"] = rows(t.f4, {"p4", "p4_dual", "p1", "p1_dual"});
  j["duals_commute"] = t.duals_commute;
  return j;
}

}  // namespace eigenkit
