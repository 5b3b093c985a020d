#include "eigenkit/verify.hpp"

#include <random>
#include <sstream>

#include "eigenkit/errors.hpp"

namespace eigenkit {

void CheckResult::fail(const std::string& what) {
  ok = false;
  failures.push_back(what);
}

namespace {

std::string tuple_words(const FlagVariety& F, const std::vector<int>& t) {
  std::string s = "(";
  for (std::size_t i = 0; i < t.size(); ++i) s += (i ? "," : "") + F.word(t[i]);
  return s + ")";
}

std::string case_label(const IsoCase& c) {
  return "r=" + std::to_string(c.r) + " s=" + std::to_string(c.s) + " k=" + std::to_string(c.k);
}

std::vector<std::string> split_lines(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) out.push_back(line);
  return out;
}

/// Levi-movable tuples with multiplicity exactly one.
std::vector<PointTuple> unit_levi_tuples(const FlagVariety& F, int n, const TupleOptions& opt) {
  std::vector<PointTuple> out;
  for_each_point_tuple(
      F, n, TupleFilter::Levi,
      [&](const PointTuple& t) {
        if (t.multiplicity == 1) out.push_back(t);
      },
      opt);
  return out;
}

}  // namespace

std::pair<RootSystemPtr, int> parse_variety_label(const std::string& label) {
  const auto slash = label.find("/P");
  if (slash == std::string::npos) throw UsageError("expected a label like C3/P2, got '" + label + "'");
  int k = 0;
  try {
    k = std::stoi(label.substr(slash + 2));
  } catch (const std::exception&) {
    throw UsageError("bad parabolic in '" + label + "'");
  }
  RootSystemPtr R = build_root_system(label.substr(0, slash));
  if (k < 1 || k > R->rank) throw UsageError("parabolic index out of range in '" + label + "'");
  return {R, k};
}

CheckResult check_tables(const CheckOptions& opt) {
  CheckResult res;
  res.name = "tables";
  const G2F4Tables t = g2f4_tables(opt.ineq.flags);
  res.lines = split_lines(render_g2f4_tables(t));
  res.data = g2f4_tables_json(t);
  if (!t.duals_commute) res.fail("the G2 to F4 coset maps do not commute with duals");
  res.summary = std::to_string(t.cells.size()) + " rows per table, duals " + (t.duals_commute ? "commute" : "do not commute");
  return res;
}

CheckResult check_lifted_products(const std::vector<IsoCase>& cases, int n, const CheckOptions& opt) {
  CheckResult res;
  res.name = "lifted-products";
  Json per_case = Json::array();
  std::size_t total = 0;
  for (const auto& c : cases) {
    const IsotropicPair pair(c.r, c.s, c.k, opt.ineq.flags);
    std::size_t count = 0, passed = 0;
    Json tuples = Json::array();
    for (const auto& t : unit_levi_tuples(pair.sub(), n, opt.ineq.tuples)) {
      std::vector<int> amb;
      for (int i : t.indices) amb.push_back(pair.image(i));
      const LeviResult lr = is_levi_movable(pair.ambient(), amb);
      const bool good = lr.point_multiple && lr.multiplicity > 0 && lr.levi_movable;
      ++count;
      if (good) ++passed;
      const std::string line = pair.sub().label() + " " + tuple_words(pair.sub(), t.indices) + " -> " +
                               pair.ambient().label() + " " + tuple_words(pair.ambient(), amb) +
                               " m=" + lr.multiplicity.get_str() + " theta=" + std::to_string(lr.theta);
      res.lines.push_back(line + (good ? "" : "  FAIL"));
      if (!good) res.fail(line);
      tuples.push_back(Json{{"sub", tuple_words(pair.sub(), t.indices)},
                            {"ambient", tuple_words(pair.ambient(), amb)},
                            {"multiplicity", lr.multiplicity.get_str()},
                            {"theta", lr.theta},
                            {"ok", good}});
    }
    total += count;
    per_case.push_back(Json{{"r", c.r}, {"s", c.s}, {"k", c.k}, {"tuples", count}, {"passed", passed}, {"rows", tuples}});
  }
  res.data["n"] = n;
  res.data["cases"] = per_case;
  res.summary = std::to_string(total) + " Levi-movable unit point tuples lifted, " +
                std::to_string(res.failures.size()) + " failures";
  return res;
}

CheckResult check_subeigencone(EmbeddingCase c, int r, int s, int n, const CheckOptions& opt) {
  CheckResult res;
  res.name = "subeigencone";
  const SubconeReport rep = verify_subeigencone(c, r, s, n, opt.ineq);
  Json rows = Json::array();
  for (const auto& row : rep.rows) {
    std::string sub, amb;
    for (std::size_t i = 0; i < row.sub_words.size(); ++i) {
      sub += (i ? "," : "") + row.sub_words[i];
      amb += (i ? "," : "") + row.ambient_words[i];
    }
    res.lines.push_back("Q" + std::to_string(row.sub_k) + "->P" + std::to_string(row.ambient_k) + " (" + sub + ") -> (" +
                        amb + ") m=" + row.multiplicity.get_str() + " theta=" + std::to_string(row.theta) +
                        (row.ok ? "" : "  FAIL"));
    rows.push_back(Json{{"q", row.sub_k},
                        {"p", row.ambient_k},
                        {"sub", row.sub_words},
                        {"ambient", row.ambient_words},
                        {"multiplicity", row.multiplicity.get_str()},
                        {"theta", row.theta},
                        {"ok", row.ok}});
  }
  Json duals = Json::array();
  for (const auto& d : rep.dual_checks) {
    for (const auto& row : d.rows) {
      res.lines.push_back("dual Q" + std::to_string(d.sub_k) + "->P" + std::to_string(d.ambient_k) + ": " + row.sub_word +
                          " -> " + row.image + ", dual " + row.sub_dual + " -> " + row.dual_image + " vs " +
                          row.image_dual + (row.commutes ? "" : "  FAIL"));
    }
    duals.push_back(Json{{"q", d.sub_k}, {"p", d.ambient_k}, {"all_commute", d.all_commute()}});
  }
  for (const auto& f : rep.failures) res.fail(f);
  Json pairs = Json::array();
  for (const auto& [q, p] : rep.pairs) pairs.push_back(Json::array({q, p}));
  res.data = Json{{"embedding", rep.label}, {"n", n}, {"gram_scale", rational_string(rep.gram_scale)},
                  {"pairs", pairs},        {"rows", rows}, {"dual_checks", duals}};
  res.summary = rep.label + ": " + std::to_string(rep.rows.size()) + " tuples, " + std::to_string(rep.failures.size()) +
                " failures";
  return res;
}

CheckResult check_bc_duality(int rmax, const std::vector<int>& ns, const CheckOptions& opt) {
  CheckResult res;
  res.name = "bc-duality";
  Json rows = Json::array();
  std::size_t tuples = 0;
  for (int r = 1; r <= rmax; ++r)
    for (int k = 1; k <= r; ++k)
      for (int n : ns) {
        const BCTransferReport rep = bc_transfer(r, k, n, opt.ineq.flags, opt.ineq.tuples);
        const bool good = rep.ok() && rep.c_levi_unit == rep.b_levi_unit;
        tuples += rep.c_levi_unit;
        res.lines.push_back(rep.c_label + " ~ " + rep.b_label + " n=" + std::to_string(n) + ": " +
                            std::to_string(rep.c_levi_unit) + " / " + std::to_string(rep.b_levi_unit) +
                            " unit Levi-movable tuples" + (good ? "" : "  FAIL"));
        if (!rep.bases_match) res.fail(rep.c_label + ": bases differ");
        if (!rep.duals_match) res.fail(rep.c_label + ": duals differ");
        for (const auto& m : rep.mismatches) res.fail(m);
        if (rep.c_levi_unit != rep.b_levi_unit) res.fail(rep.c_label + ": tuple counts differ");
        rows.push_back(Json{{"c", rep.c_label},
                            {"b", rep.b_label},
                            {"n", n},
                            {"c_tuples", rep.c_levi_unit},
                            {"b_tuples", rep.b_levi_unit},
                            {"ok", good}});
      }
  res.data["rows"] = rows;
  res.summary = std::to_string(rows.size()) + " (r,k,n) cases, " + std::to_string(tuples) + " tuples each side, " +
                std::to_string(res.failures.size()) + " mismatches";
  return res;
}

CheckResult check_identities(const std::vector<IsoCase>& exhaustive, const std::vector<IsoCase>& sampled,
                             std::size_t random_tuples, const std::vector<IsoCase>& zero_cases, int n,
                             const CheckOptions& opt) {
  CheckResult res;
  res.name = "identities";
  std::size_t elements = 0, tuples = 0, zero_tuples = 0;
  std::mt19937_64 rng(opt.seed);
  Json rows = Json::array();

  const auto run_elements = [&](const IsotropicPair& pair, const IsoCase& c) {
    for (const auto& row : check_element_identities(pair)) {
      ++elements;
      if (!row.ok()) {
        res.fail(case_label(c) + " w=" + row.word + " " + row.sub_set.str() + " lift=" + std::to_string(row.lift_ok) +
                 " p34=" + std::to_string(row.prop34) + " p35=" + std::to_string(row.prop35) +
                 " p37=" + std::to_string(row.prop37) + " dim=" + std::to_string(row.dim_ok));
      }
    }
  };
  const auto run_tuple = [&](const IsotropicPair& pair, const IsoCase& c, const std::vector<int>& t) {
    ++tuples;
    const ExpectedDimReport rep = expected_dim_zero_check(pair, t);
    if (!rep.ok()) {
      res.fail(case_label(c) + " " + tuple_words(pair.sub(), t) + " theta=" + std::to_string(rep.theta) +
               " theta_M=" + std::to_string(rep.theta_m) + " theta_H=" + std::to_string(rep.theta_h) +
               " e_G=" + std::to_string(rep.e_ambient) + " e_M=" + std::to_string(rep.e_sub));
    }
  };

  for (const auto& c : exhaustive) {
    const IsotropicPair pair(c.r, c.s, c.k, opt.ineq.flags);
    const std::size_t before_e = elements, before_t = tuples;
    run_elements(pair, c);
    const int size = static_cast<int>(pair.sub().size());
    std::vector<int> t(n, 0);
    while (true) {
      run_tuple(pair, c, t);
      int i = n - 1;
      while (i >= 0 && ++t[i] == size) t[i--] = 0;
      if (i < 0) break;
    }
    res.lines.push_back(case_label(c) + ": " + std::to_string(elements - before_e) + " elements, " +
                        std::to_string(tuples - before_t) + " tuples (all)");
    rows.push_back(Json{{"r", c.r}, {"s", c.s}, {"k", c.k}, {"mode", "exhaustive"},
                        {"elements", elements - before_e}, {"tuples", tuples - before_t}});
  }
  for (const auto& c : sampled) {
    const IsotropicPair pair(c.r, c.s, c.k, opt.ineq.flags);
    const std::size_t before_e = elements, before_t = tuples;
    run_elements(pair, c);
    std::uniform_int_distribution<int> pick(0, static_cast<int>(pair.sub().size()) - 1);
    for (std::size_t q = 0; q < random_tuples; ++q) {
      std::vector<int> t(n);
      for (auto& x : t) x = pick(rng);
      run_tuple(pair, c, t);
    }
    res.lines.push_back(case_label(c) + ": " + std::to_string(elements - before_e) + " elements, " +
                        std::to_string(tuples - before_t) + " tuples (random)");
    rows.push_back(Json{{"r", c.r}, {"s", c.s}, {"k", c.k}, {"mode", "random"},
                        {"elements", elements - before_e}, {"tuples", tuples - before_t}});
  }
  for (const auto& c : zero_cases) {
    const IsotropicPair pair(c.r, c.s, c.k, opt.ineq.flags);
    std::size_t count = 0;
    for (const auto& t : unit_levi_tuples(pair.sub(), n, opt.ineq.tuples)) {
      ++count;
      const ExpectedDimReport rep = expected_dim_zero_check(pair, t.indices);
      if (!rep.levi_unit_point || rep.theta != 0 || rep.e_ambient != 0 || !rep.ok()) {
        res.fail(case_label(c) + " " + tuple_words(pair.sub(), t.indices) + ": theta=" + std::to_string(rep.theta) +
                 " e_G=" + std::to_string(rep.e_ambient));
      }
    }
    zero_tuples += count;
    res.lines.push_back(case_label(c) + ": " + std::to_string(count) + " unit Levi-movable tuples with theta = e_G = 0");
    rows.push_back(Json{{"r", c.r}, {"s", c.s}, {"k", c.k}, {"mode", "zero-check"}, {"tuples", count}});
  }
  res.data["n"] = n;
  res.data["seed"] = opt.seed;
  res.data["rows"] = rows;
  res.summary = std::to_string(elements) + " elements, " + std::to_string(tuples) + " tuples, " +
                std::to_string(zero_tuples) + " zero checks, " + std::to_string(res.failures.size()) + " violations";
  return res;
}

CheckResult check_properness(const std::vector<IsoCase>& cases, int n, const CheckOptions& opt) {
  CheckResult res;
  res.name = "properness";
  Json rows = Json::array();
  std::size_t total = 0;
  for (const auto& c : cases) {
    if (c.s != c.r - 1) throw UsageError("the properness identity needs s = r - 1");
    const IsotropicPair pair(c.r, c.s, c.k, opt.ineq.flags);
    std::size_t count = 0;
    for (const auto& t : unit_levi_tuples(pair.sub(), n, opt.ineq.tuples)) {
      ++count;
      const ProperIdentityResult p = properness_identity(pair, t.indices);
      if (!p.precondition || p.value != 0) {
        res.fail(case_label(c) + " " + tuple_words(pair.sub(), t.indices) + " value=" + std::to_string(p.value));
      }
    }
    total += count;
    res.lines.push_back(case_label(c) + ": " + std::to_string(count) + " tuples");
    rows.push_back(Json{{"r", c.r}, {"s", c.s}, {"k", c.k}, {"tuples", count}});
  }
  res.data["n"] = n;
  res.data["rows"] = rows;
  res.summary = std::to_string(total) + " tuples, " + std::to_string(res.failures.size()) + " nonzero values";
  return res;
}

CheckResult check_projection(const std::vector<Kind>& kinds, int r, int s, int n, int grid_max,
                             const CheckOptions& opt) {
  CheckResult res;
  res.name = "projection";
  Json rows = Json::array();
  for (Kind kind : kinds) {
    const ProjectionReport rep = verify_projection(kind, r, s, n, grid_max, opt.ineq);
    const std::string tag = rep.kind + std::to_string(r) + " -> " + rep.kind + std::to_string(s);
    res.lines.push_back(tag + ": " + std::to_string(rep.samples) + " samples, " + std::to_string(rep.members) +
                        " members, " + std::to_string(rep.violations) + " violations");
    res.lines.push_back(tag + ": boundary points for " + std::to_string(rep.boundary_points) + " of " +
                        std::to_string(rep.ambient_inequalities) + " facets");
    res.lines.push_back(tag + ": section " + std::to_string(rep.section_checks - rep.section_failures) + "/" +
                        std::to_string(rep.section_checks) + ", inclusion " +
                        std::to_string(rep.inclusion_checks - rep.inclusion_failures) + "/" +
                        std::to_string(rep.inclusion_checks) + ", invariance " +
                        std::to_string(rep.invariance_checks - rep.invariance_failures) + "/" +
                        std::to_string(rep.invariance_checks));
    for (const auto& note : rep.notes) res.lines.push_back(tag + ": " + note);
    if (!rep.ok()) res.fail(tag + ": projection check failed");
    if (rep.facets_without_boundary_point > 0) res.fail(tag + ": some facets have no boundary sample");
    rows.push_back(Json{{"kind", rep.kind},
                        {"samples", rep.samples},
                        {"members", rep.members},
                        {"violations", rep.violations},
                        {"ambient_inequalities", rep.ambient_inequalities},
                        {"sub_inequalities", rep.sub_inequalities},
                        {"boundary_points", rep.boundary_points},
                        {"section_failures", rep.section_failures},
                        {"inclusion_failures", rep.inclusion_failures},
                        {"invariance_failures", rep.invariance_failures}});
  }
  res.data = Json{{"r", r}, {"s", s}, {"n", n}, {"grid_max", grid_max}, {"rows", rows}};
  res.summary = std::to_string(kinds.size()) + " types, " + std::to_string(res.failures.size()) + " failures";
  return res;
}

CheckResult check_oracle(int a1_max, const std::string& group, int group_max, int n, const CheckOptions& opt) {
  CheckResult res;
  res.name = "oracle";
  {
    const RootSystemPtr A1 = build_root_system(Kind::A, 1);
    const IneqSystem S = generate_inequalities(A1, 3, Tier::Levi, opt.ineq);
    std::size_t samples = 0, agree = 0;
    for (int a = 0; a <= a1_max; ++a)
      for (int b = 0; b <= a1_max; ++b)
        for (int c = 0; c <= a1_max; ++c) {
          ++samples;
          const bool member = membership({{Rational(a)}, {Rational(b)}, {Rational(c)}}, S).member;
          const bool oracle = saturated_search(A1, {{a}, {b}, {c}}, opt.nmax, opt.oracle).has_value();
          if (member == oracle) {
            ++agree;
          } else {
            res.fail("A1 (" + std::to_string(a) + "," + std::to_string(b) + "," + std::to_string(c) +
                     "): member=" + std::to_string(member) + " oracle=" + std::to_string(oracle));
          }
        }
    res.lines.push_back("A1 n=3 coordinates <= " + std::to_string(a1_max) + ": " + std::to_string(agree) + "/" +
                        std::to_string(samples) + " agree");
    res.data["a1"] = Json{{"max", a1_max}, {"samples", samples}, {"agree", agree}};
  }
  const RootSystemPtr R = build_root_system(group);
  const IneqSystem S = generate_inequalities(R, n, Tier::Levi, opt.ineq);
  const std::vector<IntVec> grid = integer_grid(R->rank, group_max);
  std::size_t samples = 0, members = 0, positives = 0, strict = 0, unresolved = 0;
  std::vector<std::size_t> idx(n, 0);
  while (true) {
    ++samples;
    std::vector<IntVec> lams;
    std::vector<RatVec> rl;
    for (std::size_t i : idx) {
      lams.push_back(grid[i]);
      rl.push_back(to_rational(grid[i]));
    }
    const bool member = membership(rl, S).member;
    bool violates_strictly = false;
    for (const auto& q : S.inequalities)
      if (q.evaluate(rl) > 0) violates_strictly = true;
    const auto found = saturated_search(R, lams, opt.nmax, opt.oracle);
    std::string desc;
    for (const auto& l : lams) {
      desc += desc.empty() ? "(" : " (";
      for (std::size_t c = 0; c < l.size(); ++c) desc += (c ? "," : "") + std::to_string(l[c]);
      desc += ")";
    }
    members += member;
    strict += violates_strictly;
    if (found) {
      ++positives;
      if (!member) res.fail(R->name() + " " + desc + ": invariant at N=" + std::to_string(*found) + " but not a member");
      if (violates_strictly) res.fail(R->name() + " " + desc + ": strict violator with an invariant");
    } else if (member) {
      ++unresolved;
    }
    std::size_t i = idx.size();
    while (i > 0 && ++idx[i - 1] == grid.size()) idx[--i] = 0;
    if (i == 0) break;
  }
  res.lines.push_back(R->name() + " n=" + std::to_string(n) + " coordinates <= " + std::to_string(group_max) + ": " +
                      std::to_string(samples) + " tuples, " + std::to_string(members) + " members, " +
                      std::to_string(positives) + " oracle-positive, " + std::to_string(strict) + " strict violators, " +
                      std::to_string(unresolved) + " members without an invariant up to N=" + std::to_string(opt.nmax));
  res.data["group"] = Json{{"label", R->name()}, {"n", n},         {"max", group_max},
                           {"samples", samples}, {"members", members}, {"oracle_positive", positives},
                           {"strict_violators", strict}, {"unresolved_members", unresolved}, {"nmax", opt.nmax}};
  res.summary = std::to_string(res.failures.size()) + " disagreements";
  return res;
}

CheckResult check_ring(const std::vector<std::string>& varieties, int triples, const CheckOptions& opt) {
  CheckResult res;
  res.name = "ring";
  std::mt19937_64 rng(opt.seed);
  Json rows = Json::array();
  for (const auto& label : varieties) {
    const auto [R, k] = parse_variety_label(label);
    const FlagVarietyPtr Fp = flag_variety(maximal_parabolic(R, k), opt.ineq.flags);
    const FlagVariety& F = *Fp;
    const int N = static_cast<int>(F.size());
    std::size_t bad = res.failures.size();
    const auto fail = [&](const std::string& what) { res.fail(F.label() + ": " + what); };

    for (int u = 0; u < N; ++u) {
      if (!(F.cup_product(F.unit_index(), u) == F.basis_class(u))) fail("unit times " + F.word(u));
      for (int v = 0; v < N; ++v) {
        const CohomClass p = F.cup_product(u, v);
        if (!(p == F.cup_product(v, u))) fail("not commutative at " + F.word(u) + ", " + F.word(v));
        const int c = F.codim(u) + F.codim(v);
        if (c > F.dim()) {
          if (!p.is_zero()) fail("product above the top degree at " + F.word(u) + ", " + F.word(v));
        } else if (!p.is_zero() && p.graded_codim() != c) {
          fail("grading at " + F.word(u) + ", " + F.word(v));
        }
        for (const auto& [w, q] : p.coeffs)
          if (q < 0 || !is_integral(q)) fail("coefficient " + q.get_str() + " at " + F.word(u) + ", " + F.word(v));
        if (c == F.dim()) {
          const auto it = p.coeffs.find(F.point_index());
          const Rational pt = it == p.coeffs.end() ? Rational(0) : it->second;
          if (pt != (v == F.dual(u) ? 1 : 0)) fail("Poincare pairing at " + F.word(u) + ", " + F.word(v));
        }
      }
      if (!(F.chevalley_multiply(k, F.basis_class(u)) == F.cup_product(F.divisor_index(), u))) {
        fail("Chevalley rule disagrees at " + F.word(u));
      }
    }

    std::uniform_int_distribution<int> pick(0, N - 1);
    for (int t = 0; t < triples; ++t) {
      const int a = pick(rng), b = pick(rng), c = pick(rng);
      const CohomClass A = F.basis_class(a), B = F.basis_class(b), C = F.basis_class(c);
      if (!(F.multiply(F.multiply(A, B), C) == F.multiply(A, F.multiply(B, C)))) {
        fail("associativity at " + F.word(a) + ", " + F.word(b) + ", " + F.word(c));
      }
    }

    std::size_t products = 0;
    for_each_point_tuple(
        F, 3, TupleFilter::Point,
        [&](const PointTuple& t) {
          ++products;
          if (t.theta < 0) fail("theta < 0 at " + tuple_words(F, t.indices));
        },
        opt.ineq.tuples);
    const bool good = res.failures.size() == bad;
    res.lines.push_back(F.label() + ": " + std::to_string(N) + " classes, dim " + std::to_string(F.dim()) + ", " +
                        std::to_string(triples) + " associativity triples, " + std::to_string(products) +
                        " nonzero point triples" + (good ? "" : "  FAIL"));
    rows.push_back(Json{{"variety", F.label()}, {"classes", N}, {"dim", F.dim()}, {"triples", triples},
                        {"point_products", products}, {"ok", good}});
  }
  res.data["seed"] = opt.seed;
  res.data["rows"] = rows;
  res.summary = std::to_string(varieties.size()) + " varieties, " + std::to_string(res.failures.size()) + " violations";
  return res;
}

}  // namespace eigenkit
