#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "eigenkit/embedding.hpp"
#include "eigenkit/rational.hpp"
#include "eigenkit/rootsys.hpp"
#include "eigenkit/schubert.hpp"

namespace eigenkit {

/// nonzero: every nonzero point product; point: products equal to 1·[pt]; levi: 1·[pt] and θ = 0.
enum class Tier { Nonzero, Point, Levi };
std::string tier_name(Tier t);
Tier parse_tier(const std::string& text);

/// Σ_i normals[i] · λ_i <= 0 with λ_i in fundamental-weight coordinates. The normals are jointly
/// primitive integers and scale * normals[i] · λ = <ω_P, w_i^{-1} λ>.
struct Inequality {
  int parabolic = 0;  // 1-based excluded index
  std::vector<int> tuple;
  std::vector<std::string> words;
  std::vector<IntVec> normals;
  Rational scale;
  Integer multiplicity;

  Rational evaluate(const std::vector<RatVec>& lambdas) const;
};

struct IneqSystem {
  RootSystemPtr group;
  int n = 0;
  Tier tier = Tier::Levi;
  std::vector<Inequality> inequalities;
};

struct IneqOptions {
  TupleOptions tuples;
  FlagBuildOptions flags;
};

/// All maximal parabolics in order, tuples in lexicographic order; the first tuple producing a
/// given normal is kept.
IneqSystem generate_inequalities(RootSystemPtr R, int n, Tier tier, const IneqOptions& opt = {});

struct MembershipResult {
  bool member = true;
  std::vector<std::size_t> violated;  // indices into the system
};
/// Throws UsageError for non-dominant weights or a tuple of the wrong length.
MembershipResult membership(const std::vector<RatVec>& lambdas, const IneqSystem& S);

/// Re-expresses a type C system in type B weight coordinates (b_i = a_i for i < r, b_r = 2a_r).
IneqSystem transport_c_to_b(const IneqSystem& S);
/// Same set of (normals) up to order.
bool same_inequalities(const IneqSystem& a, const IneqSystem& b);

/// π: Σ a_i ω_i -> Σ_{i<s} a_i ν_i + (Σ_{i>=s} a_i) ν_s for Sp(2r); for SO(2r+1) the same map
/// through the B/C identification. ι is the inclusion of the rank-s weights.
RatVec project_weight_bc(Kind kind, const RatVec& lambda, int s);
RatVec include_weight_bc(Kind kind, const RatVec& mu, int r);

/// Deterministic sample points: every vector in {0..max}^dim in lexicographic order.
std::vector<IntVec> integer_grid(int dim, int max);

struct ProjectionReport {
  std::string kind;
  int r = 0, s = 0, n = 0, grid_max = 0;
  std::size_t ambient_inequalities = 0, sub_inequalities = 0;
  std::size_t samples = 0, members = 0, boundary_points = 0, facets_without_boundary_point = 0;
  std::size_t violations = 0;
  std::size_t section_checks = 0, section_failures = 0;        // π∘ι = id
  std::size_t inclusion_checks = 0, inclusion_failures = 0;    // μ ∈ sub cone ⇔ ι(μ) ∈ ambient cone
  std::size_t invariance_checks = 0, invariance_failures = 0;  // <wω_P, λ> = <wω_P, ι(π(λ))>
  std::vector<std::string> notes;
  bool ok() const { return violations == 0 && section_failures == 0 && invariance_failures == 0 && inclusion_failures == 0; }
};
ProjectionReport verify_projection(Kind kind, int r, int s, int n, int grid_max = 3, const IneqOptions& opt = {});

struct SubconeTupleRow {
  int sub_k = 0, ambient_k = 0;
  std::vector<std::string> sub_words, ambient_words;
  Integer multiplicity;
  int theta = 0;
  bool ok = false;
};
struct SubconeReport {
  std::string label;
  int n = 0;
  Rational gram_scale;
  std::vector<std::pair<int, int>> pairs;
  std::vector<SubconeTupleRow> rows;
  std::vector<DualCommutationReport> dual_checks;  // filled for the G2-in-F4 and SL2-in-G2 cases
  std::vector<std::string> failures;
  bool ok() const { return failures.empty(); }
};
/// For every matched pair and every Levi-movable 1·[pt] tuple over M/Q, the ambient product of the
/// embedded tuple must be a nonzero point multiple and Levi-movable.
SubconeReport verify_subeigencone(EmbeddingCase c, int r, int s, int n, const IneqOptions& opt = {});

struct RegionReport {
  std::string group;
  int n = 0, grid_max = 0;
  std::size_t samples = 0, disagreements = 0, nonzero_count = 0, levi_count = 0;
};
/// Tier levi and tier nonzero define the same region: compared on {0..grid_max}^{rank n}.
RegionReport compare_tiers(RootSystemPtr R, int n, int grid_max, const IneqOptions& opt = {});

struct IrredundancyReport {
  int grid_max = 0;
  std::size_t inequalities = 0, witnessed = 0;
  std::vector<std::size_t> missing;
};
/// For each inequality, looks for a grid point where it is tight and every other one is strict.
IrredundancyReport irredundancy_witness(const IneqSystem& S, int grid_max);

}  // namespace eigenkit
