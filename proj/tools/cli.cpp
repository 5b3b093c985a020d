#include "cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <sstream>

#include "CLI11.hpp"
#include "eigenkit/errors.hpp"
#include "eigenkit/oracle.hpp"
#include "eigenkit/report.hpp"
#include "eigenkit/verify.hpp"

namespace eigenkit::cli {

namespace {

struct RunConfig {
  std::string command;
  std::string target;
  std::string group;
  int rank = 0;
  int parabolic = 0;
  int n = 3;
  std::string tier = "levi";
  std::string embedding = "c-in-c";
  int r = 0, s = 0, k = 0;
  int grid = 3;
  int max = 2;
  int a1_max = 6;
  int triples = 200;
  std::size_t samples = 10000;
  std::string weights;
  std::vector<std::string> words;
  std::string cache_dir;
  std::string format = "table";
  std::size_t tuple_cap = 1000000;
  std::size_t dimension_cap = 1000000;
  int nmax = 6;
  std::uint64_t seed = 20240601;
  int verbose = 0;

  Json json() const {
    Json j;
    j["command"] = command;
    if (!target.empty()) j["target"] = target;
    j["group"] = group;
    j["rank"] = rank;
    j["parabolic"] = parabolic;
    j["n"] = n;
    j["tier"] = tier;
    j["case"] = embedding;
    j["r"] = r;
    j["s"] = s;
    j["k"] = k;
    j["grid"] = grid;
    j["max"] = max;
    j["a1_max"] = a1_max;
    j["triples"] = triples;
    j["samples"] = samples;
    j["weights"] = weights;
    j["words"] = words;
    j["cache_dir"] = cache_dir;
    j["format"] = format;
    j["tuple_cap"] = tuple_cap;
    j["dimension_cap"] = dimension_cap;
    j["nmax"] = nmax;
    j["seed"] = seed;
    return j;
  }

  CheckOptions check_options() const {
    CheckOptions o;
    o.ineq.tuples.tuple_cap = tuple_cap;
    o.ineq.flags.cache_dir = cache_dir;
    o.seed = seed;
    o.nmax = nmax;
    o.oracle.dimension_cap = dimension_cap;
    return o;
  }
};

RootSystemPtr resolve_group(const RunConfig& c) {
  if (c.group.empty()) throw UsageError("--group is required");
  if (c.rank > 0) return build_root_system(parse_kind(c.group), c.rank);
  return build_root_system(c.group);
}

int require_parabolic(const RunConfig& c, const RootSystem& R) {
  if (c.parabolic < 1 || c.parabolic > R.rank) {
    throw UsageError("--parabolic must be between 1 and " + std::to_string(R.rank));
  }
  return c.parabolic;
}

/// Report envelope. Table and CSV output get the same header as comment lines.
void emit(const RunConfig& c, const Json& result, const std::string& text, const std::string& csv, std::ostream& out) {
  if (c.format == "json") {
    Json j;
    j["schema"] = kReportSchema;
    j["version"] = kReportVersion;
    j["config"] = c.json();
    j["result"] = result;
    out << j.dump(2) << "\n";
    return;
  }
  out << "# " << kReportSchema << " v" << kReportVersion << "\n";
  out << "# config " << c.json().dump() << "\n";
  out << (c.format == "csv" ? csv : text);
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string q = "\"";
  for (char ch : s) q += ch == '"' ? std::string("\"\"") : std::string(1, ch);
  return q + "\"";
}

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char ch : text) {
    if (ch == sep) {
      out.push_back(cur);
      cur.clear();
    } else if (ch != ' ') {
      cur += ch;
    }
  }
  out.push_back(cur);
  return out;
}

/// "a,b;c,d;..." with one group per weight, or n*rank comma-separated numbers.
std::vector<RatVec> parse_weights(const std::string& text, int n, int rank) {
  if (text.empty()) throw UsageError("--weights is required");
  std::vector<RatVec> out;
  if (text.find(';') != std::string::npos) {
    for (const auto& part : split(text, ';')) {
      RatVec v;
      for (const auto& x : split(part, ',')) v.push_back(parse_rational(x));
      out.push_back(v);
    }
  } else {
    const auto flat = split(text, ',');
    if (static_cast<int>(flat.size()) != n * rank) {
      throw UsageError("--weights needs " + std::to_string(n * rank) + " numbers, got " + std::to_string(flat.size()));
    }
    for (int i = 0; i < n; ++i) {
      RatVec v;
      for (int j = 0; j < rank; ++j) v.push_back(parse_rational(flat[i * rank + j]));
      out.push_back(v);
    }
  }
  if (static_cast<int>(out.size()) != n) {
    throw UsageError("--weights gives " + std::to_string(out.size()) + " weights, expected n = " + std::to_string(n));
  }
  for (const auto& v : out)
    if (static_cast<int>(v.size()) != rank) {
      throw UsageError("each weight needs " + std::to_string(rank) + " coordinates");
    }
  return out;
}

std::string vec_str(const RatVec& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + rational_string(v[i]);
  return s + ")";
}

std::string vec_str(const IntVec& v) { return vec_str(to_rational(v)); }

int cmd_roots(const RunConfig& c, std::ostream& out) {
  const RootSystemPtr R = resolve_group(c);
  std::ostringstream text, csv;
  text << R->name() << ": rank " << R->rank << ", " << R->num_positive() << " positive roots\n";
  text << "cartan matrix:\n";
  for (const auto& row : R->cartan) text << "  " << vec_str(row) << "\n";
  text << "highest root: " << vec_str(R->highest_root) << "\n";
  text << "rho: " << vec_str(R->rho) << "\n";
  std::vector<std::vector<std::string>> rows;
  csv << "index,height,simple,eps\n";
  for (std::size_t i = 0; i < R->num_positive(); ++i) {
    const std::string h = std::to_string(R->height(static_cast<int>(i)));
    rows.push_back({std::to_string(i), h, vec_str(R->positive_roots[i]), vec_str(R->positive_roots_eps[i])});
    csv << i << "," << h << "," << csv_field(vec_str(R->positive_roots[i])) << ","
        << csv_field(vec_str(R->positive_roots_eps[i])) << "\n";
  }
  text << format_columns({"#", "height", "simple", "eps"}, rows);
  emit(c, root_system_json(*R), text.str(), csv.str(), out);
  return kOk;
}

int cmd_cosets(const RunConfig& c, std::ostream& out) {
  const RootSystemPtr R = resolve_group(c);
  const FlagVarietyPtr F = flag_variety(maximal_parabolic(R, require_parabolic(c, *R)));
  std::vector<std::vector<std::string>> rows;
  std::ostringstream csv;
  csv << "index,word,length,codim,dual,chi\n";
  for (int i = 0; i < static_cast<int>(F->size()); ++i) {
    rows.push_back({std::to_string(i), F->word(i), std::to_string(F->element(i).length), std::to_string(F->codim(i)),
                    F->word(F->dual(i)), vec_str(F->chi(i))});
    csv << i << "," << F->word(i) << "," << F->element(i).length << "," << F->codim(i) << "," << F->word(F->dual(i))
        << "," << csv_field(vec_str(F->chi(i))) << "\n";
  }
  const std::string text = F->label() + ": dim " + std::to_string(F->dim()) + ", " + std::to_string(F->size()) +
                           " Schubert classes (e is the point class)\n" +
                           format_columns({"#", "w", "length", "codim", "dual", "chi"}, rows);
  emit(c, coset_table_json(*F), text, csv.str(), out);
  return kOk;
}

int cmd_multiply(const RunConfig& c, std::ostream& out) {
  const RootSystemPtr R = resolve_group(c);
  const FlagVarietyPtr F = flag_variety(maximal_parabolic(R, require_parabolic(c, *R)));
  if (c.words.empty()) throw UsageError("multiply needs at least one word (--words 1,2121)");
  std::vector<int> idx;
  for (const auto& w : c.words) {
    const int i = F->index_of_word(w);
    if (i < 0) throw UsageError("'" + w + "' is not a minimal coset representative of " + F->label());
    idx.push_back(i);
  }
  CohomClass prod = F->basis_class(idx[0]);
  for (std::size_t i = 1; i < idx.size(); ++i) prod = F->multiply(prod, F->basis_class(idx[i]));
  std::vector<std::vector<std::string>> rows;
  std::ostringstream csv;
  csv << "word,codim,coefficient\n";
  for (const auto& [i, q] : prod.coeffs) {
    rows.push_back({F->word(i), std::to_string(F->codim(i)), rational_string(q)});
    csv << F->word(i) << "," << F->codim(i) << "," << rational_string(q) << "\n";
  }
  std::string factors;
  for (const auto& w : c.words) factors += (factors.empty() ? "" : " * ") + ("s[" + w + "]");
  std::string text = F->label() + ": " + factors + "\n";
  text += prod.is_zero() ? std::string("0\n") : format_columns({"w", "codim", "coefficient"}, rows);
  Json j;
  j["variety"] = F->label();
  j["factors"] = c.words;
  j["product"] = cohom_class_json(prod);
  emit(c, j, text, csv.str(), out);
  return kOk;
}

int cmd_inequalities(const RunConfig& c, std::ostream& out) {
  const RootSystemPtr R = resolve_group(c);
  if (c.n < 1) throw UsageError("--n must be at least 1");
  IneqOptions opt = c.check_options().ineq;
  const IneqSystem S = generate_inequalities(R, c.n, parse_tier(c.tier), opt);
  const std::string text = R->name() + ", n=" + std::to_string(c.n) + ", tier " + tier_name(S.tier) + ": " +
                           std::to_string(S.inequalities.size()) + " inequalities\n" + ineq_system_table(S);
  emit(c, ineq_system_json(S), text, ineq_system_csv(S), out);
  return kOk;
}

int cmd_membership(const RunConfig& c, std::ostream& out) {
  const RootSystemPtr R = resolve_group(c);
  const std::vector<RatVec> lams = parse_weights(c.weights, c.n, R->rank);
  const IneqSystem S = generate_inequalities(R, c.n, parse_tier(c.tier), c.check_options().ineq);
  const MembershipResult m = membership(lams, S);
  Json j;
  j["group"] = R->name();
  Json ws = Json::array();
  for (const auto& l : lams) ws.push_back(rat_vec_json(l));
  j["weights"] = ws;
  j["member"] = m.member;
  j["inequalities"] = S.inequalities.size();
  Json viol = Json::array();
  std::vector<std::vector<std::string>> rows;
  std::ostringstream csv;
  csv << "index,parabolic,words,value\n";
  for (std::size_t i : m.violated) {
    const auto& q = S.inequalities[i];
    std::string words;
    for (const auto& w : q.words) words += (words.empty() ? "" : " ") + w;
    const Rational v = q.evaluate(lams);
    viol.push_back(Json{{"index", i}, {"parabolic", q.parabolic}, {"words", q.words}, {"value", rational_string(v)}});
    rows.push_back({std::to_string(i), "P" + std::to_string(q.parabolic), words, rational_string(v)});
    csv << i << "," << q.parabolic << "," << words << "," << rational_string(v) << "\n";
  }
  j["violated"] = viol;
  std::string text = R->name() + " " + [&] {
    std::string s;
    for (const auto& l : lams) s += (s.empty() ? "" : " ") + vec_str(l);
    return s;
  }() + ": " + (m.member ? "in the eigencone" : "not in the eigencone") + "\n";
  if (!m.member) text += format_columns({"#", "P", "tuple", "value (> 0)"}, rows);
  emit(c, j, text, csv.str(), out);
  return kOk;
}

int emit_check(const RunConfig& c, const CheckResult& r, std::ostream& out) {
  Json j;
  j["check"] = r.name;
  j["ok"] = r.ok;
  j["summary"] = r.summary;
  j["failures"] = r.failures;
  j["data"] = r.data;
  std::string text = std::string("status: ") + (r.ok ? "PASS" : "FAIL") + "\n" + "summary: " + r.summary + "\n";
  for (const auto& l : r.lines) text += l + "\n";
  for (const auto& f : r.failures) text += "failure: " + f + "\n";
  std::string csv = "check,status,summary\n" + csv_field(r.name) + "," + (r.ok ? "PASS" : "FAIL") + "," +
                    csv_field(r.summary) + "\n";
  emit(c, j, text, csv, out);
  return r.ok ? kOk : kVerifyFailed;
}

std::vector<IsoCase> iso_cases(int r, int s, int k) {
  if (s < 1 || s >= r) throw UsageError("need 1 <= s < r (got r=" + std::to_string(r) + ", s=" + std::to_string(s) + ")");
  if (k < 0 || k > s) throw UsageError("--k must be between 1 and s");
  std::vector<IsoCase> out;
  for (int q = 1; q <= s; ++q)
    if (k == 0 || q == k) out.push_back({r, s, q});
  return out;
}

int cmd_verify(const RunConfig& c, std::ostream& out) {
  const CheckOptions opt = c.check_options();
  const std::string& t = c.target;
  if (t == "thm-main") {
    const EmbeddingCase ec = parse_case(c.embedding);
    return emit_check(c, check_subeigencone(ec, c.r, c.s, c.n, opt), out);
  }
  if (t == "thm14") {
    return emit_check(c, check_lifted_products(iso_cases(c.r ? c.r : 3, c.s ? c.s : 2, c.k), c.n, opt), out);
  }
  if (t == "bc-duality") {
    const std::vector<int> ns = c.n == 0 ? std::vector<int>{2, 3} : std::vector<int>{c.n};
    return emit_check(c, check_bc_duality(c.r ? c.r : 3, ns, opt), out);
  }
  if (t == "identities") {
    const int r = c.r ? c.r : 3, s = c.s ? c.s : r - 1;
    const auto cases = iso_cases(r, s, c.k);
    const bool small = r <= 3;
    return emit_check(c, check_identities(small ? cases : std::vector<IsoCase>{}, small ? std::vector<IsoCase>{} : cases,
                                          c.samples, cases, c.n, opt),
                      out);
  }
  if (t == "properness") {
    const int r = c.r ? c.r : 3;
    return emit_check(c, check_properness(iso_cases(r, r - 1, c.k), c.n, opt), out);
  }
  if (t == "thm-proj") {
    std::vector<Kind> kinds = {Kind::C, Kind::B};
    if (!c.group.empty()) kinds = {parse_kind(c.group)};
    return emit_check(c, check_projection(kinds, c.r ? c.r : 3, c.s ? c.s : 2, c.n, c.grid, opt), out);
  }
  if (t == "oracle") {
    return emit_check(c, check_oracle(c.a1_max, c.group.empty() ? "C2" : c.group, c.max, c.n, opt), out);
  }
  if (t == "ring") {
    std::vector<std::string> labels;
    if (!c.group.empty()) {
      const RootSystemPtr R = resolve_group(c);
      for (int k = 1; k <= R->rank; ++k)
        if (c.parabolic == 0 || c.parabolic == k) labels.push_back(R->name() + "/P" + std::to_string(k));
    } else {
      labels = {"C2/P1", "C2/P2", "C3/P1", "C3/P2", "C3/P3", "B2/P1", "B2/P2",
                "B3/P1", "B3/P2", "B3/P3", "G2/P1", "G2/P2", "F4/P1", "F4/P4"};
    }
    return emit_check(c, check_ring(labels, c.triples, opt), out);
  }
  if (t == "tables") return emit_check(c, check_tables(opt), out);
  throw UsageError("unknown verify target '" + t +
                   "' (thm-main, thm14, bc-duality, identities, properness, thm-proj, oracle, ring, tables)");
}

int cmd_tables(const RunConfig& c, std::ostream& out) {
  if (c.target != "g2f4") throw UsageError("unknown table set '" + c.target + "' (only g2f4)");
  const G2F4Tables t = g2f4_tables(c.check_options().ineq.flags);
  std::ostringstream csv;
  csv << "table,col1,col2,col3,col4\n";
  const std::vector<std::pair<int, const std::vector<std::array<std::string, 4>>*>> all = {
      {1, &t.cells}, {2, &t.images}, {3, &t.f4}};
  for (const auto& [n, rows] : all)
    for (const auto& r : *rows) csv << n << "," << r[0] << "," << r[1] << "," << r[2] << "," << r[3] << "\n";
  emit(c, g2f4_tables_json(t), render_g2f4_tables(t), csv.str(), out);
  return t.duals_commute ? kOk : kVerifyFailed;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  RunConfig c;
  CLI::App app{"Root systems, Schubert calculus on G/P and eigencone inequalities", "eigenkit"};
  app.require_subcommand(1);
  app.fallthrough();
  app.option_defaults()->always_capture_default();

  app.add_option("--cache-dir", c.cache_dir, "structure-constant cache directory (default: $EIGENKIT_CACHE_DIR)");
  app.add_option("--format", c.format, "output format")->check(CLI::IsMember({"json", "csv", "table"}));
  app.add_option("--tuple-cap", c.tuple_cap, "largest tuple enumeration allowed")->check(CLI::PositiveNumber);
  app.add_option("--dimension-cap", c.dimension_cap, "largest representation for the oracle")->check(CLI::PositiveNumber);
  app.add_option("--nmax", c.nmax, "largest scaling tried by the oracle")->check(CLI::PositiveNumber);
  app.add_option("--seed", c.seed, "seed for sampled checks");
  app.add_flag("-v,--verbose", c.verbose, "more diagnostics on stderr");

  const auto add_group = [&](CLI::App* sub) {
    sub->add_option("--group", c.group, "group label such as C3, G2, F4 (or a kind with --rank)");
    sub->add_option("--rank", c.rank, "rank, when --group is a bare kind")->check(CLI::PositiveNumber);
  };
  const auto add_ineq = [&](CLI::App* sub) {
    sub->add_option("--n", c.n, "number of weights");
    sub->add_option("--tier", c.tier, "which products define inequalities")
        ->check(CLI::IsMember({"nonzero", "point", "levi"}));
  };

  CLI::App* roots = app.add_subcommand("roots", "root system data");
  add_group(roots);
  CLI::App* cosets = app.add_subcommand("cosets", "minimal coset representatives W^P with duals");
  add_group(cosets);
  cosets->add_option("--parabolic", c.parabolic, "excluded simple root (1-based)")->required();
  CLI::App* mult = app.add_subcommand("multiply", "product of Schubert classes");
  add_group(mult);
  mult->add_option("--parabolic", c.parabolic, "excluded simple root (1-based)")->required();
  mult->add_option("--words,words", c.words, "digit-string words, e.g. 1 2121")->delimiter(',');
  CLI::App* ineqs = app.add_subcommand("inequalities", "eigencone inequality system");
  add_group(ineqs);
  add_ineq(ineqs);
  CLI::App* member = app.add_subcommand("membership", "test a tuple of dominant weights");
  add_group(member);
  add_ineq(member);
  member->add_option("--weights", c.weights, "weights in fundamental-weight coordinates: 1,0;0,1;1,1")->required();
  CLI::App* verify = app.add_subcommand("verify", "run a verification driver");
  verify->add_option("target", c.target,
                     "thm-main, thm14, bc-duality, identities, properness, thm-proj, oracle, ring, tables")
      ->required();
  add_group(verify);
  verify->add_option("--parabolic", c.parabolic, "restrict ring checks to one parabolic");
  verify->add_option("--n", c.n, "number of weights or classes (0 for both 2 and 3 in bc-duality)");
  verify->add_option("--case", c.embedding, "embedding: c-in-c, b-in-b, d-chain, g2-in-f4, sl2-in-g2");
  verify->add_option("--r", c.r, "ambient rank");
  verify->add_option("--s", c.s, "subgroup rank");
  verify->add_option("--k", c.k, "matched parabolic (0 for all)");
  verify->add_option("--grid", c.grid, "grid bound for projection samples");
  verify->add_option("--max", c.max, "coordinate bound for oracle samples");
  verify->add_option("--a1-max", c.a1_max, "coordinate bound for the A1 oracle comparison");
  verify->add_option("--triples", c.triples, "random associativity triples per variety");
  verify->add_option("--samples", c.samples, "random tuples per case for rank 4 and up");
  CLI::App* tables = app.add_subcommand("tables", "reproduce coset tables");
  tables->add_option("set", c.target, "table set (g2f4)")->required();

  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(rev);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }

  if (c.cache_dir.empty()) {
    if (const char* env = std::getenv("EIGENKIT_CACHE_DIR")) c.cache_dir = env;
  }
  FlagBuildOptions defaults;
  defaults.cache_dir = c.cache_dir;
  set_default_flag_options(defaults);

  try {
    const CLI::App* sub = app.get_subcommands().front();
    c.command = sub->get_name();
    if (c.command == "roots") return cmd_roots(c, out);
    if (c.command == "cosets") return cmd_cosets(c, out);
    if (c.command == "multiply") return cmd_multiply(c, out);
    if (c.command == "inequalities") return cmd_inequalities(c, out);
    if (c.command == "membership") return cmd_membership(c, out);
    if (c.command == "verify") return cmd_verify(c, out);
    if (c.command == "tables") return cmd_tables(c, out);
    return kUsage;
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n";
    return kUsage;
  } catch (const ConfigError& e) {
    err << "configuration error: " << e.what() << "\n";
    return kUsage;
  } catch (const ResourceError& e) {
    err << "resource limit: " << e.what() << "\n";
    return kResource;
  } catch (const InternalError& e) {
    err << "internal check failed: " << e.what() << "\n";
    return kVerifyFailed;
  }
}

}  // namespace eigenkit::cli
