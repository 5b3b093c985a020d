#include "eigenkit/schubert.hpp"

#include <algorithm>
#include <mutex>

#include "eigenkit/errors.hpp"

namespace eigenkit {

int CohomClass::graded_codim() const {
  if (coeffs.empty() || variety == nullptr) return -1;
  int d = -1;
  for (const auto& [i, c] : coeffs) {
    const int ci = variety->codim(i);
    if (d >= 0 && ci != d) return -1;
    d = ci;
  }
  return d;
}

void CohomClass::add_term(int index, const Rational& c) {
  if (c == 0) return;
  auto it = coeffs.find(index);
  if (it == coeffs.end()) {
    coeffs.emplace(index, c);
    return;
  }
  it->second += c;
  if (it->second == 0) coeffs.erase(it);
}

std::string FlagVariety::label() const {
  return root_system().name() + "/" + parabolic_.label();
}

int FlagVariety::index_of(const WeylElement& w) const {
  auto it = lookup_.find(w.rho_image);
  return it == lookup_.end() ? -1 : it->second;
}

int FlagVariety::index_of_word(const std::string& digits) const {
  const WeylElement w = element_from_word(root_system(), parse_word(digits, root_system().rank));
  const int i = index_of(w);
  if (i < 0) throw UsageError(digits + " is not a minimal coset representative for " + label());
  return i;
}

int FlagVariety::divisor_index() const {
  if (parabolic_.excluded.size() != 1) throw UsageError("divisor class requires a maximal parabolic");
  for (std::size_t i = 0; i < basis_.size(); ++i)
    if (codim(static_cast<int>(i)) == 1) return static_cast<int>(i);
  throw InternalError("no divisor class in " + label());
}

CohomClass FlagVariety::basis_class(int i, const Rational& c) const {
  CohomClass out;
  out.variety = this;
  out.add_term(i, c);
  return out;
}

const std::vector<std::pair<int, Integer>>& FlagVariety::structure_constants(int u, int v) const {
  return table_.at(u).at(v);
}

CohomClass FlagVariety::cup_product(int u, int v) const {
  CohomClass out;
  out.variety = this;
  for (const auto& [w, c] : table_.at(u).at(v)) out.add_term(w, Rational(c));
  return out;
}

CohomClass FlagVariety::multiply(const CohomClass& a, const CohomClass& b) const {
  CohomClass out;
  out.variety = this;
  for (const auto& [u, cu] : a.coeffs)
    for (const auto& [v, cv] : b.coeffs)
      for (const auto& [w, c] : table_[u][v]) out.add_term(w, cu * cv * c);
  return out;
}

CohomClass FlagVariety::to_length_basis(const CohomClass& c) const {
  CohomClass out;
  out.variety = this;
  for (const auto& [i, x] : c.coeffs) out.add_term(dual_[i], x);
  return out;
}

CohomClass FlagVariety::from_length_basis(const CohomClass& c) const {
  return to_length_basis(c);  // the relabelling is an involution
}

CohomClass FlagVariety::chevalley_multiply(int slot, const CohomClass& c) const {
  if (parabolic_.excluded.size() != 1 || parabolic_.excluded[0] != slot - 1) {
    throw UsageError("chevalley_multiply: divisor slot " + std::to_string(slot) + " is not the excluded root of " +
                     label());
  }
  const RootSystem& R = root_system();
  const int k = slot - 1;
  const CohomClass src = to_length_basis(c);
  CohomClass dst;
  dst.variety = this;
  for (const auto& [i, x] : src.coeffs) {
    const WeylElement& w = basis_[i];
    for (std::size_t b = 0; b < R.num_positive(); ++b) {
      if (R.positive_roots[b][k] == 0) continue;  // Levi roots pair to zero with ω_P
      const WeylElement y = eigenkit::multiply(R, w, root_reflection(R, R.positive_roots[b]));
      if (y.length != w.length + 1) continue;
      const int j = index_of(y);
      if (j < 0) continue;
      dst.add_term(j, x * R.coroot_coefficient(static_cast<int>(b), k));
    }
  }
  return from_length_basis(dst);
}

RatVec FlagVariety::chi_from_rho(int i) const {
  const RootSystem& R = root_system();
  RatVec rho(R.rank), rho_l(R.rank);
  for (const auto& b : R.positive_roots) {
    bool levi = true;
    for (int e : parabolic_.excluded)
      if (b[e] != 0) levi = false;
    for (int j = 0; j < R.rank; ++j) {
      rho[j] += Rational(b[j]) / 2;
      if (levi) rho_l[j] += Rational(b[j]) / 2;
    }
  }
  const WeylElement winv = inverse(R, basis_[i]);
  RatVec wr(R.rank);
  for (int j = 0; j < R.rank; ++j) wr[j] = winv.rho_image[j];
  return add(sub(rho, scale(rho_l, 2)), R.weight_to_root(wr));
}

int FlagVariety::theta(const std::vector<int>& tuple) const {
  if (parabolic_.excluded.size() != 1) throw UsageError("theta requires a maximal parabolic");
  const int k = parabolic_.excluded[0];
  int t = chi_[0][k];
  for (int i : tuple) t -= chi_.at(i)[k];
  return t;
}

RatVec FlagVariety::rho_levi_eps() const {
  const RootSystem& R = root_system();
  RatVec v(R.ambient_dim);
  for (std::size_t b = 0; b < R.num_positive(); ++b) {
    bool levi = true;
    for (int e : parabolic_.excluded)
      if (R.positive_roots[b][e] != 0) levi = false;
    if (levi) v = add(v, R.positive_roots_eps[b]);
  }
  return scale(v, Rational(1, 2));
}

RatVec FlagVariety::x_p_eps() const {
  if (parabolic_.excluded.size() != 1) throw UsageError("x_P requires a maximal parabolic");
  return root_system().dual_basis[parabolic_.excluded[0]];
}

Integer FlagVariety::point_coefficient(const std::vector<int>& tuple) const {
  std::vector<Integer> cur(basis_.size());
  cur[unit_index()] = 1;
  for (int a : tuple) {
    std::vector<Integer> next(basis_.size());
    for (std::size_t c = 0; c < cur.size(); ++c) {
      if (cur[c] == 0) continue;
      for (const auto& [w, x] : table_[c].at(a)) next[w] += cur[c] * x;
    }
    cur = std::move(next);
  }
  return cur[point_index()];
}

int codim(const FlagVariety& F, int i) {
  return F.codim(i);
}

std::shared_ptr<const FlagVariety> FlagVariety::build(const ParabolicSpec& P, const FlagBuildOptions& opt) {
  std::shared_ptr<FlagVariety> F(new FlagVariety());
  const RootSystem& R = *P.root_system;
  F->parabolic_ = P;
  F->basis_ = minimal_coset_reps(P);
  for (std::size_t i = 0; i < F->basis_.size(); ++i) F->lookup_[F->basis_[i].rho_image] = static_cast<int>(i);
  F->dim_ = flag_dimension(P);
  ensure(F->basis_.back().length == F->dim_, "longest minimal representative has the wrong length");

  std::vector<std::size_t> piece(F->dim_ + 1, 0);
  for (const auto& w : F->basis_) ++piece[w.length];
  for (std::size_t c : piece) {
    if (c > opt.max_piece) {
      throw ResourceError(F->label() + " has a graded piece with " + std::to_string(c) +
                          " classes, above the cap of " + std::to_string(opt.max_piece));
    }
  }

  for (const auto& w : F->basis_) F->dual_.push_back(F->index_of(dual_rep(P, w)));
  for (const auto& w : F->basis_) {
    IntVec chi(R.rank, 0);
    for (const auto& b : R.positive_roots) {
      bool levi = true;
      for (int e : P.excluded)
        if (b[e] != 0) levi = false;
      if (levi) continue;
      IntVec img = apply_to_root(w, b);
      if (std::any_of(img.begin(), img.end(), [](int x) { return x < 0; })) continue;
      for (int j = 0; j < R.rank; ++j) chi[j] += b[j];
    }
    F->chi_.push_back(chi);
  }

  if (opt.cache_dir.empty() || !F->load_cache(opt.cache_dir)) {
    F->compute_products(opt);
    if (!opt.cache_dir.empty()) F->save_cache(opt.cache_dir);
  } else {
    F->from_cache_ = true;
  }

  const std::size_t n = F->basis_.size();
  F->table_.assign(n, std::vector<std::vector<std::pair<int, Integer>>>(n));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      auto& dst = F->table_[a][b];
      for (const auto& [w, c] : F->length_table_[F->dual_[a]][F->dual_[b]]) dst.emplace_back(F->dual_[w], c);
      std::sort(dst.begin(), dst.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
    }

  // Poincaré pairing in both conventions.
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      if (F->codim(static_cast<int>(a)) + F->codim(static_cast<int>(b)) != F->dim_) continue;
      Integer pt = 0, top = 0;
      for (const auto& [w, c] : F->table_[a][b])
        if (w == F->point_index()) pt = c;
      for (const auto& [w, c] : F->length_table_[a][b])
        if (w == F->unit_index()) top = c;
      const bool dual_pair = F->dual_[a] == static_cast<int>(b);
      ensure(pt == (dual_pair ? 1 : 0), "Poincaré pairing fails in " + F->label());
      ensure(top == (dual_pair ? 1 : 0), "Poincaré pairing fails in the length convention for " + F->label());
    }
  return F;
}

namespace {

std::mutex registry_mutex;
std::map<std::string, FlagVarietyPtr>& registry() {
  static std::map<std::string, FlagVarietyPtr> r;
  return r;
}
FlagBuildOptions& default_options() {
  static FlagBuildOptions o;
  return o;
}

}  // namespace

void set_default_flag_options(const FlagBuildOptions& opt) {
  std::lock_guard<std::mutex> lock(registry_mutex);
  default_options() = opt;
}

FlagVarietyPtr flag_variety(const ParabolicSpec& P, const FlagBuildOptions& opt) {
  const std::string key = P.root_system->name() + "/" + P.label();
  {
    std::lock_guard<std::mutex> lock(registry_mutex);
    auto it = registry().find(key);
    if (it != registry().end()) return it->second;
  }
  FlagBuildOptions eff = opt;
  if (eff.cache_dir.empty()) {
    std::lock_guard<std::mutex> lock(registry_mutex);
    eff.cache_dir = default_options().cache_dir;
  }
  FlagVarietyPtr F = FlagVariety::build(P, eff);
  std::lock_guard<std::mutex> lock(registry_mutex);
  return registry().emplace(key, F).first->second;
}

FlagVarietyPtr flag_variety(const std::string& group, int k, const FlagBuildOptions& opt) {
  return flag_variety(maximal_parabolic(build_root_system(group), k), opt);
}

std::string filter_name(TupleFilter f) {
  switch (f) {
    case TupleFilter::All: return "all";
    case TupleFilter::Point: return "point";
    case TupleFilter::Levi: return "levi";
  }
  return "?";
}

TupleFilter parse_filter(const std::string& text) {
  if (text == "all") return TupleFilter::All;
  if (text == "point") return TupleFilter::Point;
  if (text == "levi") return TupleFilter::Levi;
  throw UsageError("unknown tuple filter '" + text + "' (expected all, point or levi)");
}

Integer count_complementary_tuples(const FlagVariety& F, int n) {
  const int D = F.dim();
  std::vector<Integer> per(D + 1);
  for (std::size_t i = 0; i < F.size(); ++i) per[F.codim(static_cast<int>(i))] += 1;
  std::vector<Integer> ways(D + 1);
  ways[0] = 1;
  for (int s = 0; s < n; ++s) {
    std::vector<Integer> next(D + 1);
    for (int a = 0; a <= D; ++a) {
      if (ways[a] == 0) continue;
      for (int c = 0; a + c <= D; ++c) next[a + c] += ways[a] * per[c];
    }
    ways = std::move(next);
  }
  return ways[D];
}

void for_each_point_tuple(const FlagVariety& F, int n, TupleFilter filter,
                          const std::function<void(const PointTuple&)>& visit, const TupleOptions& opt) {
  if (n < 1) throw UsageError("point_product_tuples requires n >= 1");
  const Integer bound = count_complementary_tuples(F, n);
  if (bound > Integer(static_cast<unsigned long>(opt.tuple_cap))) {
    throw ResourceError("enumerating " + F.label() + " with n=" + std::to_string(n) + " needs up to " +
                        bound.get_str() + " tuples, above the tuple cap of " + std::to_string(opt.tuple_cap));
  }
  const int N = static_cast<int>(F.size());
  const int D = F.dim();
  std::vector<int> idx(n);
  std::vector<std::vector<Integer>> partial(n, std::vector<Integer>(N));
  std::vector<Integer> start(N);
  start[F.unit_index()] = 1;

  std::function<void(int, const std::vector<Integer>&, int)> rec = [&](int slot, const std::vector<Integer>& cur,
                                                                      int used) {
    if (slot == n - 1) {
      for (int a = 0; a < N; ++a) {
        if (used + F.codim(a) != D) continue;
        idx[slot] = a;
        PointTuple t;
        t.indices = idx;
        t.multiplicity = cur[F.dual(a)];
        if (t.multiplicity != 0) {
          t.theta = F.theta(idx);
          ensure(t.theta >= 0, "θ < 0 for a nonzero point product in " + F.label());
        }
        if (filter == TupleFilter::Point && t.multiplicity == 0) continue;
        if (filter == TupleFilter::Levi && (t.multiplicity == 0 || t.theta != 0)) continue;
        visit(t);
      }
      return;
    }
    for (int a = 0; a < N; ++a) {
      if (used + F.codim(a) > D) continue;
      idx[slot] = a;
      auto& next = partial[slot];
      std::fill(next.begin(), next.end(), Integer(0));
      bool nonzero = false;
      for (int c = 0; c < N; ++c) {
        if (cur[c] == 0) continue;
        for (const auto& [w, x] : F.structure_constants(c, a)) {
          next[w] += cur[c] * x;
          nonzero = true;
        }
      }
      if (!nonzero && filter != TupleFilter::All) continue;
      rec(slot + 1, std::vector<Integer>(next), used + F.codim(a));
    }
  };
  rec(0, start, 0);
}

std::vector<PointTuple> point_product_tuples(const FlagVariety& F, int n, TupleFilter filter,
                                             const TupleOptions& opt) {
  std::vector<PointTuple> out;
  for_each_point_tuple(F, n, filter, [&](const PointTuple& t) { out.push_back(t); }, opt);
  return out;
}

LeviResult is_levi_movable(const FlagVariety& F, const std::vector<int>& tuple) {
  LeviResult r;
  int total = 0;
  for (int a : tuple) total += F.codim(a);
  r.multiplicity = total == F.dim() ? F.point_coefficient(tuple) : Integer(0);
  r.theta = F.theta(tuple);
  r.point_multiple = r.multiplicity != 0;
  if (r.point_multiple) ensure(r.theta >= 0, "θ < 0 for a nonzero point product in " + F.label());
  r.levi_movable = r.point_multiple && r.theta == 0;
  return r;
}

}  // namespace eigenkit
