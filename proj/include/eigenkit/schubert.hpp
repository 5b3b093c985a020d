#pragma once

#include <cstddef>
#include <functional>
#include <map>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "eigenkit/rational.hpp"
#include "eigenkit/rootsys.hpp"
#include "eigenkit/weyl.hpp"

namespace eigenkit {

class FlagVariety;

/// Rational combination of Schubert classes of one G/P. Keys are basis indices of the variety
/// (positions in W^P); classes are indexed the way the tables print them: σ_e is the point
/// class and the longest representative is the unit.
struct CohomClass {
  const FlagVariety* variety = nullptr;
  std::map<int, Rational> coeffs;  // zero coefficients never stored

  bool is_zero() const { return coeffs.empty(); }
  /// Common codimension of all terms, or -1 when mixed (or zero).
  int graded_codim() const;
  void add_term(int index, const Rational& c);
  bool operator==(const CohomClass& o) const { return coeffs == o.coeffs; }
};

struct FlagBuildOptions {
  std::string cache_dir;            // empty disables the on-disk cache
  std::size_t max_piece = 30;       // basis classes per graded piece
  std::size_t max_monomials = 200000;
};

/// G/P for a parabolic P together with its cohomology ring in the Schubert basis.
class FlagVariety {
 public:
  static std::shared_ptr<const FlagVariety> build(const ParabolicSpec& P, const FlagBuildOptions& opt = {});

  const RootSystem& root_system() const { return *parabolic_.root_system; }
  const ParabolicSpec& parabolic() const { return parabolic_; }
  const std::vector<WeylElement>& basis() const { return basis_; }
  std::size_t size() const { return basis_.size(); }
  int dim() const { return dim_; }
  std::string label() const;  // e.g. "C3/P2"

  /// Basis index of w, or -1 when w is not in W^P.
  int index_of(const WeylElement& w) const;
  int index_of_word(const std::string& digits) const;
  const WeylElement& element(int i) const { return basis_[i]; }
  std::string word(int i) const { return format_word(basis_[i].word); }

  int codim(int i) const { return dim_ - basis_[i].length; }
  int dual(int i) const { return dual_[i]; }
  int point_index() const { return 0; }
  int unit_index() const { return static_cast<int>(basis_.size()) - 1; }
  /// The unique codimension-one class (maximal parabolics only).
  int divisor_index() const;

  CohomClass basis_class(int i, const Rational& c = 1) const;
  CohomClass unit() const { return basis_class(unit_index()); }
  CohomClass point() const { return basis_class(point_index()); }

  /// σ_u · σ_v.
  CohomClass cup_product(int u, int v) const;
  CohomClass multiply(const CohomClass& a, const CohomClass& b) const;
  /// Sparse structure constants: σ_u · σ_v = Σ_w c_{u,v}^w σ_w.
  const std::vector<std::pair<int, Integer>>& structure_constants(int u, int v) const;

  /// Multiplication by the divisor class through the Chevalley formula on G/P (an
  /// independent route from the structure-constant table). `slot` is the 1-based excluded index.
  CohomClass chevalley_multiply(int slot, const CohomClass& c) const;

  /// χ_w as simple-root coordinates: sum of β in R+ \ R_L+ with w(β) > 0.
  const IntVec& chi(int i) const { return chi_[i]; }
  /// ρ - 2ρ^L + w^{-1}ρ in simple-root coordinates, computed independently of chi().
  RatVec chi_from_rho(int i) const;
  /// (χ_e - Σ χ_{w_i})(x_P); maximal parabolics only.
  int theta(const std::vector<int>& tuple) const;

  /// ρ^L in ε coordinates, and x_P (dual basis element of the excluded root) in ε coordinates.
  RatVec rho_levi_eps() const;
  RatVec x_p_eps() const;

  /// Coefficient of [pt] in σ_{w_1} ... σ_{w_n}.
  Integer point_coefficient(const std::vector<int>& tuple) const;

  bool loaded_from_cache() const { return from_cache_; }

 private:
  FlagVariety() = default;
  void compute_products(const FlagBuildOptions& opt);
  bool load_cache(const std::string& dir);
  void save_cache(const std::string& dir) const;
  std::string cache_file(const std::string& dir) const;
  CohomClass to_length_basis(const CohomClass& c) const;
  CohomClass from_length_basis(const CohomClass& c) const;

  ParabolicSpec parabolic_;
  std::vector<WeylElement> basis_;
  std::map<IntVec, int> lookup_;
  std::vector<int> dual_;
  std::vector<IntVec> chi_;
  int dim_ = 0;
  bool from_cache_ = false;
  // Products in the length-indexed convention σ^u (codimension l(u)).
  std::vector<std::vector<std::vector<std::pair<int, Integer>>>> length_table_;
  // Same table re-indexed in the tables' convention.
  std::vector<std::vector<std::vector<std::pair<int, Integer>>>> table_;
};

using FlagVarietyPtr = std::shared_ptr<const FlagVariety>;

/// Shared, lazily built instances keyed by (group, parabolic). Thread-safe.
FlagVarietyPtr flag_variety(const std::string& group, int k, const FlagBuildOptions& opt = {});
FlagVarietyPtr flag_variety(const ParabolicSpec& P, const FlagBuildOptions& opt = {});
/// Process-wide defaults used by flag_variety when no options are passed (cache directory).
void set_default_flag_options(const FlagBuildOptions& opt);

int codim(const FlagVariety& F, int i);

enum class TupleFilter { All, Point, Levi };
std::string filter_name(TupleFilter f);
TupleFilter parse_filter(const std::string& text);

struct PointTuple {
  std::vector<int> indices;
  Integer multiplicity;  // coefficient of [pt]
  int theta = 0;         // only meaningful when multiplicity != 0
};

struct TupleOptions {
  std::size_t tuple_cap = 1000000;
};

/// Number of ordered n-tuples whose codimensions sum to dim (an upper bound on the stream).
Integer count_complementary_tuples(const FlagVariety& F, int n);

/// Enumerates n-tuples with Σ codim = dim in lexicographic order of basis indices.
/// `All` keeps every such tuple, `Point` those with nonzero product, `Levi` additionally θ = 0.
/// Throws ResourceError when the complementary-tuple count exceeds the cap.
void for_each_point_tuple(const FlagVariety& F, int n, TupleFilter filter,
                          const std::function<void(const PointTuple&)>& visit, const TupleOptions& opt = {});
std::vector<PointTuple> point_product_tuples(const FlagVariety& F, int n, TupleFilter filter,
                                             const TupleOptions& opt = {});

struct LeviResult {
  Integer multiplicity;
  int theta = 0;
  bool point_multiple = false;  // nonzero multiple of [pt]
  bool levi_movable = false;
};

/// Throws InternalError if a nonzero point product has θ < 0.
LeviResult is_levi_movable(const FlagVariety& F, const std::vector<int>& tuple);

}  // namespace eigenkit
