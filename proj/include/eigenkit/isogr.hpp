#pragma once

#include <optional>
#include <string>
#include <vector>

#include "eigenkit/embedding.hpp"
#include "eigenkit/schubert.hpp"

namespace eigenkit {

/// A Schubert cell of IG(k, 2r) as the k-subset of {1..2r} recording where a subspace meets the
/// standard flag e_1, ..., e_r, e_r', ..., e_1'. Position 2r+1-j carries e_j'.
struct IndexSet {
  int r = 0;
  std::vector<int> elems;  // strictly increasing

  int k() const { return static_cast<int>(elems.size()); }
  bool operator==(const IndexSet& o) const { return r == o.r && elems == o.elems; }
  std::string str() const;  // "{2,4}"
};

/// Validates and builds an index set; throws UsageError naming the violated condition.
IndexSet make_index_set(int r, std::vector<int> elems);

/// |I <= m| and |I > m|.
int count_le(const IndexSet& I, int m);
int count_gt(const IndexSet& I, int m);
/// Ī = {2r+1-i} and Ĩ = {1..2r} minus (I ∪ Ī).
std::vector<int> bar_set(const IndexSet& I);
std::vector<int> tilde_set(const IndexSet& I);

/// Index set of w in W^P for Sp(2r)/P_k: positions of w(ε_1), ..., w(ε_k).
IndexSet index_set_of(const FlagVariety& F, int basis_index);
/// Inverse direction; throws UsageError when no basis element has this index set.
int element_of_index_set(const FlagVariety& F, const IndexSet& I);
/// Index sets of the whole basis, in basis order. Throws UsageError for non-type-C input and
/// InternalError if the correspondence is not a bijection.
std::vector<IndexSet> weyl_index_bijection(const FlagVariety& F);

/// |I > Ĩ| + (|I > Ī| + |I > r|) / 2.
int dim_from_index(const IndexSet& I);
/// dim IG(k, 2r) = k(4r - 3k + 1) / 2; zero for k = 0.
int dim_isotropic_grassmannian(int k, int r);

/// Adds 2(r-s) to each element greater than s (I_M lives over s = I_M.r).
IndexSet lift_index(const IndexSet& IM, int r);
/// 2(r-s)|I_M <= s|.
int codim_jump(const IndexSet& IM, int r);
/// |I_M <= s|.
int bc_delta(const IndexSet& IM);

/// Sp(2s) x Sp(2(r-s)) in Sp(2r) with the matched parabolics Q_k, P_k (k <= s).
class IsotropicPair {
 public:
  IsotropicPair(int r, int s, int k, const FlagBuildOptions& opt = {});

  int r() const { return r_; }
  int s() const { return s_; }
  int k() const { return k_; }
  const SubsystemEmbedding& embedding() const { return emb_; }
  const FlagVariety& sub() const { return *sub_; }        // IG(k, 2s)
  const FlagVariety& ambient() const { return *amb_; }    // IG(k, 2r)
  /// Basis index in the ambient variety of the image of sub basis element i.
  int image(int i) const { return image_[i]; }

  /// (χ_w)(x_P), (χ^M_w)(x_P), (χ^H_w)(x_Q) with x = Σ_{i<=k} ε_i^*, for sub basis element i.
  int chi_ambient(int i) const { return chi_g_[i]; }
  int chi_m(int i) const { return chi_m_[i]; }
  int chi_h(int i) const { return chi_h_[i]; }
  int theta_ambient(const std::vector<int>& tuple) const;
  int theta_m(const std::vector<int>& tuple) const;
  int theta_h(const std::vector<int>& tuple) const;
  /// dim - Σ codim, over G/P (images) and over M/Q.
  int expected_dim_ambient(const std::vector<int>& tuple) const;
  int expected_dim_sub(const std::vector<int>& tuple) const;

 private:
  int r_, s_, k_;
  SubsystemEmbedding emb_;
  FlagVarietyPtr sub_, amb_;
  std::vector<int> image_, chi_g_, chi_m_, chi_h_;
  int chi_g_e_ = 0, chi_m_e_ = 0, chi_h_e_ = 0;
};

/// Per-element checks: the lift rule, the two χ differences and the codimension jump.
struct ElementIdentityRow {
  std::string word;
  IndexSet sub_set, ambient_set;
  int codim_sub = 0, codim_ambient = 0;
  int chi_diff = 0;   // (χ_w - χ^M_w)(x_P)
  int jump = 0;       // codim_jump
  int bc_diff = 0;    // (χ^M_w - χ^H_w)(x_Q)
  bool lift_ok = false, prop34 = false, prop35 = false, prop37 = false, dim_ok = false;
  bool ok() const { return lift_ok && prop34 && prop35 && prop37 && dim_ok; }
};
std::vector<ElementIdentityRow> check_element_identities(const IsotropicPair& pair);

/// θ values and expected dimensions for one tuple of sub basis indices.
struct ExpectedDimReport {
  std::vector<int> tuple;
  int theta = 0, theta_m = 0, theta_h = 0;
  int e_ambient = 0, e_sub = 0;
  bool lemma1 = false, lemma2 = false;
  bool levi_unit_point = false;  // the sub product is 1·[pt] and Levi-movable
  bool zero_check = true;        // θ = 0 and e(w,G) = 0 (only asserted when levi_unit_point)
  bool ok() const { return lemma1 && lemma2 && zero_check; }
};
ExpectedDimReport expected_dim_zero_check(const IsotropicPair& pair, const std::vector<int>& tuple);

/// (O1, O2, O2', O3) for s = r - 1; requires 1 <= k <= r - 1.
struct OrbitDims {
  int o1 = 0, o2 = 0, o2p = 0, o3 = 0;
};
OrbitDims orbit_dims(int k, int r);

enum class FlagTag { Standard, Shifted };
std::string flag_tag_name(FlagTag f);

/// One orbit row: either empty or a dimension; O3 rows carry a non-emptiness-unknown flag.
struct OrbitIntersection {
  bool empty = false;
  std::optional<int> dim;
  bool nonempty_unknown = false;
};
struct SchubertOrbitDims {
  OrbitIntersection o1, o2, o2p, o3;
};
/// I_M lives over s = r - 1. Throws UsageError when I has no element > r+1, or (shifted flag)
/// no element < r.
SchubertOrbitDims schubert_orbit_dims(const IndexSet& IM, int r, FlagTag flag);

/// k - Σ_j |I_j^M <= r-1| for sub basis indices of an IsotropicPair with s = r - 1.
struct ProperIdentityResult {
  bool precondition = false;  // the sub product is 1·[pt] and Levi-movable
  int value = 0;
};
ProperIdentityResult properness_identity(const IsotropicPair& pair, const std::vector<int>& tuple);

/// Sp(2r)/P_k matched with SO(2r+1)/P_k through identical reduced words.
struct BCTransferReport {
  std::string c_label, b_label;
  std::vector<std::string> words;  // common basis words
  bool bases_match = false;
  bool duals_match = false;
  int n = 0;
  std::size_t c_levi_unit = 0, b_levi_unit = 0;
  std::vector<std::string> mismatches;
  bool ok() const { return bases_match && duals_match && mismatches.empty(); }
};
BCTransferReport bc_transfer(int r, int k, int n, const FlagBuildOptions& opt = {}, const TupleOptions& topt = {});

}  // namespace eigenkit
