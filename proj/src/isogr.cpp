#include "eigenkit/isogr.hpp"

#include <algorithm>
#include <set>

#include "eigenkit/errors.hpp"

namespace eigenkit {

std::string IndexSet::str() const {
  std::string out = "{";
  for (std::size_t i = 0; i < elems.size(); ++i) out += (i ? "," : "") + std::to_string(elems[i]);
  return out + "}";
}

IndexSet make_index_set(int r, std::vector<int> elems) {
  if (r < 1) throw UsageError("index set needs r >= 1");
  const int k = static_cast<int>(elems.size());
  if (k < 1 || k > r) throw UsageError("index set size must satisfy 1 <= k <= r (k=" + std::to_string(k) + ")");
  for (std::size_t i = 0; i < elems.size(); ++i) {
    if (elems[i] < 1 || elems[i] > 2 * r) throw UsageError("index set element out of {1.." + std::to_string(2 * r) + "}");
    if (i > 0 && elems[i] <= elems[i - 1]) throw UsageError("index set must be strictly increasing");
  }
  for (int a : elems)
    for (int b : elems)
      if (a + b == 2 * r + 1) {
        throw UsageError("index set is not isotropic: " + std::to_string(a) + " + " + std::to_string(b) +
                         " = 2r+1");
      }
  return IndexSet{r, std::move(elems)};
}

int count_le(const IndexSet& I, int m) {
  return static_cast<int>(std::count_if(I.elems.begin(), I.elems.end(), [m](int i) { return i <= m; }));
}

int count_gt(const IndexSet& I, int m) {
  return static_cast<int>(std::count_if(I.elems.begin(), I.elems.end(), [m](int i) { return i > m; }));
}

std::vector<int> bar_set(const IndexSet& I) {
  std::vector<int> out;
  for (int i : I.elems) out.push_back(2 * I.r + 1 - i);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<int> tilde_set(const IndexSet& I) {
  const std::vector<int> bar = bar_set(I);
  std::vector<int> out;
  for (int i = 1; i <= 2 * I.r; ++i) {
    if (std::find(I.elems.begin(), I.elems.end(), i) != I.elems.end()) continue;
    if (std::find(bar.begin(), bar.end(), i) != bar.end()) continue;
    out.push_back(i);
  }
  return out;
}

namespace {

int pairs_greater(const std::vector<int>& a, const std::vector<int>& b) {
  int n = 0;
  for (int x : a)
    for (int y : b)
      if (x > y) ++n;
  return n;
}

void require_type_c(const FlagVariety& F) {
  if (F.root_system().kind != Kind::C) throw UsageError("index sets are defined for Sp(2r) flag varieties only");
  if (F.parabolic().excluded.size() != 1) throw UsageError("index sets require a maximal parabolic");
}

RatVec unit_eps(int dim, int i) {
  RatVec v(dim);
  v[i] = 1;
  return v;
}

RatVec act_eps(const RootSystem& R, const WeylElement& w, const RatVec& v) {
  return R.weight_to_eps(apply_to_weight(w, R.eps_to_weight(v)));
}

bool first_nonzero_positive(const RatVec& v) {
  for (const auto& x : v)
    if (x != 0) return x > 0;
  return false;
}

Rational x_sum(const RatVec& v, int k) {  // Σ_{i<=k} ε_i^*
  Rational t = 0;
  for (int i = 0; i < k; ++i) t += v[i];
  return t;
}

}  // namespace

IndexSet index_set_of(const FlagVariety& F, int basis_index) {
  require_type_c(F);
  const RootSystem& R = F.root_system();
  const int r = R.rank;
  const int k = F.parabolic().excluded[0] + 1;
  std::vector<int> elems;
  for (int i = 0; i < k; ++i) {
    const RatVec v = act_eps(R, F.element(basis_index), unit_eps(r, i));
    int pos = 0;
    for (int j = 0; j < r; ++j) {
      if (v[j] == 1) pos = j + 1;
      if (v[j] == -1) pos = 2 * r - j;
    }
    ensure(pos != 0, "w(ε_i) is not a signed basis vector");
    elems.push_back(pos);
  }
  std::sort(elems.begin(), elems.end());
  return make_index_set(r, elems);
}

int element_of_index_set(const FlagVariety& F, const IndexSet& I) {
  for (std::size_t i = 0; i < F.size(); ++i)
    if (index_set_of(F, static_cast<int>(i)) == I) return static_cast<int>(i);
  throw UsageError("no Schubert cell of " + F.label() + " has index set " + I.str());
}

std::vector<IndexSet> weyl_index_bijection(const FlagVariety& F) {
  require_type_c(F);
  std::vector<IndexSet> out;
  std::set<std::vector<int>> seen;
  for (std::size_t i = 0; i < F.size(); ++i) {
    out.push_back(index_set_of(F, static_cast<int>(i)));
    ensure(seen.insert(out.back().elems).second, "two cells share index set " + out.back().str());
  }
  return out;
}

int dim_from_index(const IndexSet& I) {
  const IndexSet J = make_index_set(I.r, I.elems);  // validates
  const int half = pairs_greater(J.elems, bar_set(J)) + count_gt(J, J.r);
  ensure(half % 2 == 0, "odd half-sum in the dimension formula for " + J.str());
  return pairs_greater(J.elems, tilde_set(J)) + half / 2;
}

int dim_isotropic_grassmannian(int k, int r) {
  if (k == 0) return 0;
  return k * (4 * r - 3 * k + 1) / 2;
}

IndexSet lift_index(const IndexSet& IM, int r) {
  const int s = IM.r;
  if (s >= r) throw UsageError("lift_index requires s < r");
  std::vector<int> out;
  for (int i : IM.elems) out.push_back(i > s ? i + 2 * (r - s) : i);
  return make_index_set(r, out);
}

int codim_jump(const IndexSet& IM, int r) {
  return 2 * (r - IM.r) * count_le(IM, IM.r);
}

int bc_delta(const IndexSet& IM) {
  return count_le(IM, IM.r);
}

IsotropicPair::IsotropicPair(int r, int s, int k, const FlagBuildOptions& opt)
    : r_(r), s_(s), k_(k), emb_(build_embedding(EmbeddingCase::CinC, r, s)) {
  if (k < 1 || k > s) throw UsageError("isotropic pair requires 1 <= k <= s");
  sub_ = flag_variety(maximal_parabolic(emb_.sub, k), opt);
  amb_ = flag_variety(maximal_parabolic(emb_.ambient, k), opt);
  const RootSystem& A = amb_->root_system();

  // Positive roots of M (both factors) and of the first factor of H = SO(2s+1) x Sp(2(r-s)), ε coordinates.
  std::vector<RatVec> m_roots, h_roots;
  for (const auto& b : A.positive_roots_eps) {
    bool low = false, high = false;
    for (int j = 0; j < r; ++j) {
      if (b[j] == 0) continue;
      (j < s ? low : high) = true;
    }
    if (!(low && high)) m_roots.push_back(b);
  }
  for (int i = 0; i < s; ++i) {
    h_roots.push_back(unit_eps(r, i));
    for (int j = i + 1; j < s; ++j) {
      RatVec a = unit_eps(r, i), b = unit_eps(r, i);
      a[j] = -1;
      b[j] = 1;
      h_roots.push_back(a);
      h_roots.push_back(b);
    }
  }

  const auto chi_over = [&](const std::vector<RatVec>& roots, const WeylElement& w) {
    Rational t = 0;
    for (const auto& b : roots) {
      const Rational xb = x_sum(b, k);
      if (xb == 0) continue;  // Levi root
      if (first_nonzero_positive(act_eps(A, w, b))) t += xb;
    }
    ensure(is_integral(t), "non-integral χ value");
    return to_int(t);
  };

  for (std::size_t i = 0; i < sub_->size(); ++i) {
    const CosetImage img = embed_coset(emb_, sub_->element(static_cast<int>(i)), k, k);
    ensure(img.raw_minimal, "Sp(2s) coset image is not a minimal representative");
    const int j = amb_->index_of(img.rep);
    image_.push_back(j);
    chi_g_.push_back(amb_->chi(j)[k - 1]);
    chi_m_.push_back(chi_over(m_roots, img.raw));
    chi_h_.push_back(chi_over(h_roots, img.raw));
  }
  chi_g_e_ = amb_->chi(0)[k - 1];
  chi_m_e_ = chi_m_[0];
  chi_h_e_ = chi_h_[0];
}

int IsotropicPair::theta_ambient(const std::vector<int>& tuple) const {
  int t = chi_g_e_;
  for (int i : tuple) t -= chi_g_.at(i);
  return t;
}

int IsotropicPair::theta_m(const std::vector<int>& tuple) const {
  int t = chi_m_e_;
  for (int i : tuple) t -= chi_m_.at(i);
  return t;
}

int IsotropicPair::theta_h(const std::vector<int>& tuple) const {
  int t = chi_h_e_;
  for (int i : tuple) t -= chi_h_.at(i);
  return t;
}

int IsotropicPair::expected_dim_ambient(const std::vector<int>& tuple) const {
  int e = amb_->dim();
  for (int i : tuple) e -= amb_->codim(image_.at(i));
  return e;
}

int IsotropicPair::expected_dim_sub(const std::vector<int>& tuple) const {
  int e = sub_->dim();
  for (int i : tuple) e -= sub_->codim(i);
  return e;
}

std::vector<ElementIdentityRow> check_element_identities(const IsotropicPair& pair) {
  std::vector<ElementIdentityRow> rows;
  const FlagVariety& M = pair.sub();
  const FlagVariety& G = pair.ambient();
  for (std::size_t i = 0; i < M.size(); ++i) {
    const int ii = static_cast<int>(i);
    ElementIdentityRow row;
    row.word = M.word(ii);
    row.sub_set = index_set_of(M, ii);
    row.ambient_set = index_set_of(G, pair.image(ii));
    row.codim_sub = M.codim(ii);
    row.codim_ambient = G.codim(pair.image(ii));
    row.chi_diff = pair.chi_ambient(ii) - pair.chi_m(ii);
    row.jump = codim_jump(row.sub_set, pair.r());
    row.bc_diff = pair.chi_m(ii) - pair.chi_h(ii);
    row.lift_ok = lift_index(row.sub_set, pair.r()) == row.ambient_set;
    row.prop34 = row.codim_ambient - row.codim_sub == row.chi_diff;
    row.prop35 = row.codim_ambient - row.codim_sub == row.jump &&
                 G.dim() - dim_from_index(row.ambient_set) - (M.dim() - dim_from_index(row.sub_set)) == row.jump;
    row.prop37 = row.bc_diff == bc_delta(row.sub_set);
    row.dim_ok = dim_from_index(row.sub_set) == M.element(ii).length &&
                 dim_from_index(row.ambient_set) == G.element(pair.image(ii)).length;
    rows.push_back(row);
  }
  return rows;
}

namespace {

bool is_levi_unit_point(const FlagVariety& F, const std::vector<int>& tuple) {
  const LeviResult res = is_levi_movable(F, tuple);
  return res.levi_movable && res.multiplicity == 1;
}

}  // namespace

ExpectedDimReport expected_dim_zero_check(const IsotropicPair& pair, const std::vector<int>& tuple) {
  for (int i : tuple)
    if (i < 0 || i >= static_cast<int>(pair.sub().size())) throw UsageError("tuple entry is not in W_M^Q");
  ExpectedDimReport rep;
  rep.tuple = tuple;
  rep.theta = pair.theta_ambient(tuple);
  rep.theta_m = pair.theta_m(tuple);
  rep.theta_h = pair.theta_h(tuple);
  rep.e_ambient = pair.expected_dim_ambient(tuple);
  rep.e_sub = pair.expected_dim_sub(tuple);
  const int diff = rep.e_ambient - rep.e_sub;
  rep.lemma1 = rep.theta - rep.theta_m == diff;
  rep.lemma2 = 2 * (pair.r() - pair.s()) * (rep.theta_m - rep.theta_h) == diff;
  rep.levi_unit_point = is_levi_unit_point(pair.sub(), tuple);
  if (rep.levi_unit_point) rep.zero_check = rep.theta == 0 && rep.e_ambient == 0;
  return rep;
}

OrbitDims orbit_dims(int k, int r) {
  if (r < 2) throw UsageError("orbit_dims requires r >= 2 (s = r - 1 >= 1)");
  if (k < 1 || k > r - 1) throw UsageError("orbit_dims requires 1 <= k <= r - 1");
  OrbitDims d;
  d.o1 = dim_isotropic_grassmannian(k, r - 1);
  d.o2 = dim_isotropic_grassmannian(k - 1, r - 1) + 1 + k;
  d.o2p = dim_isotropic_grassmannian(k - 1, r - 1) + 1;
  d.o3 = dim_isotropic_grassmannian(k, r);
  return d;
}

std::string flag_tag_name(FlagTag f) {
  return f == FlagTag::Standard ? "standard" : "shifted";
}

SchubertOrbitDims schubert_orbit_dims(const IndexSet& IM, int r, FlagTag flag) {
  if (IM.r != r - 1) throw UsageError("schubert_orbit_dims requires s = r - 1");
  const IndexSet I = lift_index(IM, r);
  if (count_gt(I, r + 1) == 0) throw UsageError("schubert_orbit_dims requires an element of I greater than r+1");
  if (flag == FlagTag::Shifted && count_le(I, r - 1) == 0) {
    throw UsageError("the shifted flag requires an element of I smaller than r");
  }
  const int dm = dim_from_index(IM);
  const int above = count_gt(IM, r - 1);
  SchubertOrbitDims out;
  if (flag == FlagTag::Standard) {
    out.o1.dim = dm;
    out.o2.dim = dm + above + 1;
  } else {
    out.o1.empty = true;
    out.o2.dim = dm + above;
  }
  out.o2p.empty = true;
  out.o3.dim = dim_from_index(I);
  out.o3.nonempty_unknown = true;
  return out;
}

ProperIdentityResult properness_identity(const IsotropicPair& pair, const std::vector<int>& tuple) {
  if (pair.s() != pair.r() - 1) throw UsageError("properness_identity requires s = r - 1");
  ProperIdentityResult res;
  res.precondition = is_levi_unit_point(pair.sub(), tuple);
  res.value = pair.k();
  for (int i : tuple) res.value -= count_le(index_set_of(pair.sub(), i), pair.r() - 1);
  return res;
}

BCTransferReport bc_transfer(int r, int k, int n, const FlagBuildOptions& opt, const TupleOptions& topt) {
  const FlagVarietyPtr C = flag_variety(maximal_parabolic(build_root_system(Kind::C, r), k), opt);
  const FlagVarietyPtr B = flag_variety(maximal_parabolic(build_root_system(Kind::B, r), k), opt);
  BCTransferReport rep;
  rep.c_label = C->label();
  rep.b_label = B->label();
  rep.n = n;
  rep.bases_match = C->size() == B->size();
  for (std::size_t i = 0; rep.bases_match && i < C->size(); ++i) {
    if (C->word(static_cast<int>(i)) != B->word(static_cast<int>(i))) rep.bases_match = false;
    rep.words.push_back(C->word(static_cast<int>(i)));
  }
  if (!rep.bases_match) return rep;
  rep.duals_match = true;
  for (std::size_t i = 0; i < C->size(); ++i)
    if (C->dual(static_cast<int>(i)) != B->dual(static_cast<int>(i))) rep.duals_match = false;

  const auto describe = [&](const std::vector<int>& t) {
    std::string s = "(";
    for (std::size_t i = 0; i < t.size(); ++i) s += (i ? "," : "") + C->word(t[i]);
    return s + ")";
  };
  const auto cross = [&](const FlagVariety& from, const FlagVariety& to, std::size_t& count) {
    for_each_point_tuple(
        from, n, TupleFilter::Levi,
        [&](const PointTuple& t) {
          if (t.multiplicity != 1) return;
          ++count;
          const LeviResult other = is_levi_movable(to, t.indices);
          if (!(other.levi_movable && other.multiplicity == 1)) {
            rep.mismatches.push_back(from.label() + " " + describe(t.indices) + " -> " + to.label() + " m=" +
                                     other.multiplicity.get_str() + " theta=" + std::to_string(other.theta));
          }
        },
        topt);
  };
  cross(*C, *B, rep.c_levi_unit);
  cross(*B, *C, rep.b_levi_unit);
  return rep;
}

}  // namespace eigenkit
