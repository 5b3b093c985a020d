#include "eigenkit/eigencone.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "eigenkit/errors.hpp"

namespace eigenkit {

std::string tier_name(Tier t) {
  switch (t) {
    case Tier::Nonzero: return "nonzero";
    case Tier::Point: return "point";
    case Tier::Levi: return "levi";
  }
  return "?";
}

Tier parse_tier(const std::string& text) {
  if (text == "nonzero") return Tier::Nonzero;
  if (text == "point") return Tier::Point;
  if (text == "levi") return Tier::Levi;
  throw UsageError("unknown tier '" + text + "' (expected nonzero, point or levi)");
}

Rational Inequality::evaluate(const std::vector<RatVec>& lambdas) const {
  Rational t = 0;
  for (std::size_t i = 0; i < normals.size(); ++i)
    for (std::size_t j = 0; j < normals[i].size(); ++j) t += normals[i][j] * lambdas[i][j];
  return t;
}

namespace {

// Clears denominators and common factors jointly; returns the factor f with raw = f * out.
Rational primitive(const std::vector<RatVec>& raw, std::vector<IntVec>& out) {
  Integer l = 1;
  for (const auto& v : raw)
    for (const auto& x : v) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.get_den().get_mpz_t());
  Integer g = 0;
  for (const auto& v : raw)
    for (const auto& x : v) {
      const Integer z = x.get_num() * (l / x.get_den());
      mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), z.get_mpz_t());
    }
  ensure(g != 0, "zero inequality normal");
  out.clear();
  for (const auto& v : raw) {
    IntVec iv;
    for (const auto& x : v) {
      const Integer z = x.get_num() * (l / x.get_den()) / g;
      iv.push_back(static_cast<int>(to_int64(z)));
    }
    out.push_back(iv);
  }
  Rational f(g, l);
  f.canonicalize();
  return f;
}

// <w ω_k, ω_j> for every j: the functional λ -> <ω_k, w^{-1} λ> in weight coordinates.
RatVec weight_functional(const RootSystem& R, const WeylElement& w, int k) {
  RatVec om(R.rank);
  om[k] = 1;
  const RatVec img = apply_to_weight(w, om);
  RatVec f(R.rank);
  for (int j = 0; j < R.rank; ++j)
    for (int m = 0; m < R.rank; ++m) f[j] += img[m] * R.gram_weights(m, j);
  return f;
}

void require_dominant(const std::vector<RatVec>& lambdas, const IneqSystem& S) {
  if (static_cast<int>(lambdas.size()) != S.n) {
    throw UsageError("expected " + std::to_string(S.n) + " weights, got " + std::to_string(lambdas.size()));
  }
  for (const auto& l : lambdas) {
    if (static_cast<int>(l.size()) != S.group->rank) {
      throw UsageError("weight has " + std::to_string(l.size()) + " coordinates, expected " +
                       std::to_string(S.group->rank));
    }
    for (const auto& x : l)
      if (x < 0) throw UsageError("weights must be dominant (all fundamental-weight coordinates >= 0)");
  }
}

// Evaluates every inequality slot on a list of weights with 64-bit integers (weights scaled by `den`).
struct SlotTable {
  std::vector<std::vector<std::vector<long long>>> v;  // [ineq][slot][weight]
};

SlotTable slot_table(const IneqSystem& S, const std::vector<RatVec>& weights, const Integer& den) {
  SlotTable t;
  t.v.assign(S.inequalities.size(), std::vector<std::vector<long long>>(S.n, std::vector<long long>(weights.size())));
  for (std::size_t e = 0; e < S.inequalities.size(); ++e)
    for (int j = 0; j < S.n; ++j)
      for (std::size_t w = 0; w < weights.size(); ++w) {
        Rational x = 0;
        for (std::size_t c = 0; c < weights[w].size(); ++c) x += S.inequalities[e].normals[j][c] * weights[w][c];
        x *= den;
        ensure(is_integral(x), "weight denominators exceed the table scale");
        t.v[e][j][w] = to_int64(x.get_num());
      }
  return t;
}

bool table_member(const SlotTable& t, const std::vector<std::size_t>& idx) {
  for (const auto& e : t.v) {
    long long s = 0;
    for (std::size_t j = 0; j < idx.size(); ++j) s += e[j][idx[j]];
    if (s > 0) return false;
  }
  return true;
}

// Odometer over {0..base-1}^n.
bool next_tuple(std::vector<std::size_t>& idx, std::size_t base) {
  for (std::size_t j = idx.size(); j-- > 0;) {
    if (++idx[j] < base) return true;
    idx[j] = 0;
  }
  return false;
}

std::vector<RatVec> rational_grid(int dim, int max) {
  std::vector<RatVec> out;
  for (const auto& v : integer_grid(dim, max)) out.push_back(to_rational(v));
  return out;
}

}  // namespace

IneqSystem generate_inequalities(RootSystemPtr R, int n, Tier tier, const IneqOptions& opt) {
  if (n < 1) throw UsageError("generate_inequalities requires n >= 1");
  IneqSystem S;
  S.group = R;
  S.n = n;
  S.tier = tier;
  std::set<std::vector<IntVec>> seen;
  for (int k = 1; k <= R->rank; ++k) {
    const FlagVarietyPtr F = flag_variety(maximal_parabolic(R, k), opt.flags);
    std::vector<RatVec> fun;
    for (const auto& w : F->basis()) fun.push_back(weight_functional(*R, w, k - 1));
    const TupleFilter filter = tier == Tier::Levi ? TupleFilter::Levi : TupleFilter::Point;
    for_each_point_tuple(
        *F, n, filter,
        [&](const PointTuple& t) {
          if (tier != Tier::Nonzero && t.multiplicity != 1) return;
          std::vector<RatVec> raw;
          for (int i : t.indices) raw.push_back(fun[i]);
          Inequality q;
          q.scale = primitive(raw, q.normals);
          if (!seen.insert(q.normals).second) return;
          q.parabolic = k;
          q.tuple = t.indices;
          for (int i : t.indices) q.words.push_back(F->word(i));
          q.multiplicity = t.multiplicity;
          S.inequalities.push_back(std::move(q));
        },
        opt.tuples);
  }
  return S;
}

MembershipResult membership(const std::vector<RatVec>& lambdas, const IneqSystem& S) {
  require_dominant(lambdas, S);
  MembershipResult res;
  for (std::size_t e = 0; e < S.inequalities.size(); ++e) {
    if (S.inequalities[e].evaluate(lambdas) > 0) {
      res.member = false;
      res.violated.push_back(e);
    }
  }
  return res;
}

IneqSystem transport_c_to_b(const IneqSystem& S) {
  if (S.group->kind != Kind::C) throw UsageError("transport_c_to_b expects a type C system");
  IneqSystem out;
  out.group = build_root_system(Kind::B, S.group->rank);
  out.n = S.n;
  out.tier = S.tier;
  for (const auto& q : S.inequalities) {
    std::vector<RatVec> raw;
    for (const auto& v : q.normals) {
      RatVec x = to_rational(v);
      x.back() /= 2;
      raw.push_back(x);
    }
    Inequality t = q;
    t.scale = q.scale * primitive(raw, t.normals);
    out.inequalities.push_back(std::move(t));
  }
  return out;
}

bool same_inequalities(const IneqSystem& a, const IneqSystem& b) {
  std::set<std::vector<IntVec>> sa, sb;
  for (const auto& q : a.inequalities) sa.insert(q.normals);
  for (const auto& q : b.inequalities) sb.insert(q.normals);
  return a.n == b.n && sa == sb;
}

RatVec project_weight_bc(Kind kind, const RatVec& lambda, int s) {
  if (kind != Kind::B && kind != Kind::C) throw UsageError("the projection is defined for types B and C");
  const int r = static_cast<int>(lambda.size());
  if (s < 1 || s >= r) throw UsageError("projection requires 1 <= s < r");
  RatVec a = lambda;
  if (kind == Kind::B) a[r - 1] /= 2;
  RatVec out(a.begin(), a.begin() + s);
  for (int i = s; i < r; ++i) out[s - 1] += a[i];
  if (kind == Kind::B) out[s - 1] *= 2;
  return out;
}

RatVec include_weight_bc(Kind kind, const RatVec& mu, int r) {
  if (kind != Kind::B && kind != Kind::C) throw UsageError("the inclusion is defined for types B and C");
  const int s = static_cast<int>(mu.size());
  if (s < 1 || s >= r) throw UsageError("inclusion requires 1 <= s < r");
  RatVec out(r);
  for (int i = 0; i < s; ++i) out[i] = mu[i];
  if (kind == Kind::B) out[s - 1] /= 2;
  return out;
}

std::vector<IntVec> integer_grid(int dim, int max) {
  std::vector<IntVec> out;
  IntVec v(dim, 0);
  while (true) {
    out.push_back(v);
    int j = dim - 1;
    while (j >= 0 && v[j] == max) v[j--] = 0;
    if (j < 0) break;
    ++v[j];
  }
  return out;
}

ProjectionReport verify_projection(Kind kind, int r, int s, int n, int grid_max, const IneqOptions& opt) {
  if (kind != Kind::B && kind != Kind::C) throw ConfigError("verify_projection supports types B and C");
  if (s < 1 || s >= r) throw ConfigError("verify_projection requires 1 <= s < r");
  ProjectionReport rep;
  rep.kind = kind_name(kind);
  rep.r = r;
  rep.s = s;
  rep.n = n;
  rep.grid_max = grid_max;
  const RootSystemPtr A = build_root_system(kind, r);
  const RootSystemPtr B = build_root_system(kind, s);
  const IneqSystem SA = generate_inequalities(A, n, Tier::Levi, opt);
  const IneqSystem SB = generate_inequalities(B, n, Tier::Levi, opt);
  rep.ambient_inequalities = SA.inequalities.size();
  rep.sub_inequalities = SB.inequalities.size();

  // Ambient grid, its projections, and their evaluation tables.
  const std::vector<RatVec> grid = rational_grid(r, grid_max);
  std::vector<RatVec> proj;
  std::map<RatVec, std::size_t> proj_index;
  std::vector<std::size_t> proj_of(grid.size());
  for (std::size_t w = 0; w < grid.size(); ++w) {
    const RatVec p = project_weight_bc(kind, grid[w], s);
    auto it = proj_index.find(p);
    if (it == proj_index.end()) {
      it = proj_index.emplace(p, proj.size()).first;
      proj.push_back(p);
    }
    proj_of[w] = it->second;
  }
  const SlotTable TA = slot_table(SA, grid, 1);
  const SlotTable TB = slot_table(SB, proj, 1);

  std::vector<bool> has_boundary(SA.inequalities.size(), false);
  std::vector<std::size_t> idx(n, 0), pidx(n);
  do {
    ++rep.samples;
    if (!table_member(TA, idx)) continue;
    ++rep.members;
    bool nonzero = false;
    for (std::size_t i : idx)
      if (i != 0) nonzero = true;
    if (nonzero) {
      for (std::size_t e = 0; e < SA.inequalities.size(); ++e) {
        if (has_boundary[e]) continue;
        long long t = 0;
        for (int j = 0; j < n; ++j) t += TA.v[e][j][idx[j]];
        if (t == 0) {
          has_boundary[e] = true;
          ++rep.boundary_points;
        }
      }
    }
    for (int j = 0; j < n; ++j) pidx[j] = proj_of[idx[j]];
    if (!table_member(TB, pidx)) {
      if (rep.violations < 5) {
        std::string d;
        for (int j = 0; j < n; ++j) {
          d += j ? " " : "";
          for (std::size_t c = 0; c < grid[idx[j]].size(); ++c) d += (c ? "," : "") + grid[idx[j]][c].get_str();
        }
        rep.notes.push_back("projection leaves the sub-eigencone at " + d);
      }
      ++rep.violations;
    }
  } while (next_tuple(idx, grid.size()));
  rep.facets_without_boundary_point =
      static_cast<std::size_t>(std::count(has_boundary.begin(), has_boundary.end(), false));
  if (rep.facets_without_boundary_point > 0) {
    rep.notes.push_back(std::to_string(rep.facets_without_boundary_point) +
                        " facets have no nonzero tight point on the grid");
  }

  // Section property on every projected weight and on the sub grid.
  const std::vector<RatVec> sub_grid = rational_grid(s, grid_max);
  const std::vector<RatVec>* lists[] = {&proj, &sub_grid};
  for (const auto* list : lists)
    for (const auto& mu : *list) {
      ++rep.section_checks;
      if (project_weight_bc(kind, include_weight_bc(kind, mu, r), s) != mu) ++rep.section_failures;
    }

  // Sub-eigencone inclusion: μ in the sub cone iff ι(μ) in the ambient cone.
  std::vector<RatVec> incl;
  for (const auto& mu : sub_grid) incl.push_back(include_weight_bc(kind, mu, r));
  const SlotTable TI = slot_table(SA, incl, 2);
  const SlotTable TS = slot_table(SB, sub_grid, 1);
  std::fill(idx.begin(), idx.end(), 0);
  do {
    ++rep.inclusion_checks;
    if (table_member(TI, idx) != table_member(TS, idx)) ++rep.inclusion_failures;
  } while (next_tuple(idx, sub_grid.size()));

  // <ω_P, w^{-1} λ> = <ω_P, w^{-1} ι(π(λ))> for w in W_M^Q, every matched P_k.
  const SubsystemEmbedding E = build_embedding(kind == Kind::C ? EmbeddingCase::CinC : EmbeddingCase::BinB, r, s);
  for (int k = 1; k <= s; ++k) {
    for (const auto& w : minimal_coset_reps(maximal_parabolic(E.sub, k))) {
      const RatVec f = weight_functional(*A, embed_element(E, w), k - 1);
      for (const auto& lam : grid) {
        ++rep.invariance_checks;
        if (dot(f, lam) != dot(f, include_weight_bc(kind, project_weight_bc(kind, lam, s), r))) {
          ++rep.invariance_failures;
        }
      }
    }
  }
  return rep;
}

SubconeReport verify_subeigencone(EmbeddingCase c, int r, int s, int n, const IneqOptions& opt) {
  const SubsystemEmbedding E = build_embedding(c, r, s);
  SubconeReport rep;
  rep.label = E.label();
  rep.n = n;
  rep.gram_scale = E.gram_scale;
  rep.pairs = E.matched;
  for (const auto& [q, p] : E.matched) {
    if (!levi_generators_compatible(E, q, p)) {
      throw ConfigError("Q" + std::to_string(q) + " and P" + std::to_string(p) + " do not match for " + E.label());
    }
    const FlagVarietyPtr FM = flag_variety(maximal_parabolic(E.sub, q), opt.flags);
    const FlagVarietyPtr FG = flag_variety(maximal_parabolic(E.ambient, p), opt.flags);
    std::vector<int> image;
    for (const auto& w : FM->basis()) {
      const int j = FG->index_of(embed_coset(E, w, q, p).rep);
      ensure(j >= 0, "embedded coset is not in W^P");
      image.push_back(j);
    }
    for_each_point_tuple(
        *FM, n, TupleFilter::Levi,
        [&](const PointTuple& t) {
          if (t.multiplicity != 1) return;
          SubconeTupleRow row;
          row.sub_k = q;
          row.ambient_k = p;
          std::vector<int> amb;
          for (int i : t.indices) {
            amb.push_back(image[i]);
            row.sub_words.push_back(FM->word(i));
            row.ambient_words.push_back(FG->word(image[i]));
          }
          const LeviResult res = is_levi_movable(*FG, amb);
          row.multiplicity = res.multiplicity;
          row.theta = res.theta;
          row.ok = res.point_multiple && res.multiplicity > 0 && res.levi_movable;
          if (!row.ok) {
            std::string d;
            for (const auto& w : row.ambient_words) d += (d.empty() ? "" : " ") + w;
            rep.failures.push_back("Q" + std::to_string(q) + "->P" + std::to_string(p) + " (" + d +
                                   "): m=" + res.multiplicity.get_str() + " theta=" + std::to_string(res.theta));
          }
          rep.rows.push_back(std::move(row));
        },
        opt.tuples);
    if (c == EmbeddingCase::G2inF4 || c == EmbeddingCase::SL2inG2) {
      rep.dual_checks.push_back(verify_dual_commutes(E, q, p));
      if (!rep.dual_checks.back().all_commute()) {
        rep.failures.push_back("coset map does not commute with duals for Q" + std::to_string(q));
      }
    }
    if (c == EmbeddingCase::SL2inG2 && image.back() != FG->unit_index()) {
      rep.failures.push_back("the big cell of M/Q does not map to the big cell of G/P");
    }
  }
  return rep;
}

RegionReport compare_tiers(RootSystemPtr R, int n, int grid_max, const IneqOptions& opt) {
  RegionReport rep;
  rep.group = R->name();
  rep.n = n;
  rep.grid_max = grid_max;
  const IneqSystem nz = generate_inequalities(R, n, Tier::Nonzero, opt);
  const IneqSystem lv = generate_inequalities(R, n, Tier::Levi, opt);
  rep.nonzero_count = nz.inequalities.size();
  rep.levi_count = lv.inequalities.size();
  const std::vector<RatVec> grid = rational_grid(R->rank, grid_max);
  const SlotTable TN = slot_table(nz, grid, 1), TL = slot_table(lv, grid, 1);
  std::vector<std::size_t> idx(n, 0);
  do {
    ++rep.samples;
    if (table_member(TN, idx) != table_member(TL, idx)) ++rep.disagreements;
  } while (next_tuple(idx, grid.size()));
  return rep;
}

IrredundancyReport irredundancy_witness(const IneqSystem& S, int grid_max) {
  IrredundancyReport rep;
  rep.grid_max = grid_max;
  rep.inequalities = S.inequalities.size();
  const std::vector<RatVec> grid = rational_grid(S.group->rank, grid_max);
  const SlotTable T = slot_table(S, grid, 1);
  std::vector<bool> found(S.inequalities.size(), false);
  std::vector<long long> val(S.inequalities.size());
  std::vector<std::size_t> idx(S.n, 0);
  do {
    std::size_t tight = 0, tight_at = 0;
    bool feasible = true;
    for (std::size_t e = 0; e < val.size() && feasible; ++e) {
      long long t = 0;
      for (int j = 0; j < S.n; ++j) t += T.v[e][j][idx[j]];
      if (t > 0) feasible = false;
      if (t == 0) {
        ++tight;
        tight_at = e;
      }
    }
    if (feasible && tight == 1) found[tight_at] = true;
  } while (next_tuple(idx, grid.size()));
  for (std::size_t e = 0; e < found.size(); ++e) {
    if (found[e]) {
      ++rep.witnessed;
    } else {
      rep.missing.push_back(e);
    }
  }
  return rep;
}

}  // namespace eigenkit
