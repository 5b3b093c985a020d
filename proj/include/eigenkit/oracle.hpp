#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <vector>

#include "eigenkit/rational.hpp"
#include "eigenkit/rootsys.hpp"

namespace eigenkit {

struct OracleLimits {
  std::size_t dimension_cap = 1000000;  // per irreducible
};

/// Weights in fundamental-weight coordinates.
struct CharacterTable {
  RootSystemPtr root_system;
  IntVec highest;
  std::map<IntVec, Integer> dominant;  // multiplicity of each dominant weight
  Integer dimension;
};

/// Π_{β>0} <λ+ρ, β^∨> / <ρ, β^∨>.
Integer weyl_dimension(const RootSystem& R, const IntVec& lambda);
/// Dominant representative of a weight and the number of simple reflections used.
IntVec dominant_representative(const RootSystem& R, IntVec v, int* reflections = nullptr);
/// Weyl orbit of a weight.
std::vector<IntVec> weyl_orbit(const RootSystem& R, const IntVec& v);
/// -w0 λ.
IntVec dual_weight(const RootSystem& R, const IntVec& lambda);

/// Freudenthal recursion over dominant weights; the total is checked against weyl_dimension.
/// Throws UsageError for non-dominant λ and ResourceError above the dimension cap.
CharacterTable weight_multiplicities(RootSystemPtr R, const IntVec& lambda, const OracleLimits& lim = {});

/// V_λ ⊗ V_μ as highest weights with multiplicities (Klimyk's formula).
std::map<IntVec, Integer> tensor_decompose(RootSystemPtr R, const IntVec& lambda, const IntVec& mu,
                                           const OracleLimits& lim = {});

/// dim (V_{λ_1} ⊗ ... ⊗ V_{λ_n})^G.
Integer invariant_dim(RootSystemPtr R, const std::vector<IntVec>& lambdas, const OracleLimits& lim = {});

/// Smallest N in 1..nmax with a nonzero invariant for N·λ⃗, or nothing.
std::optional<int> saturated_search(RootSystemPtr R, const std::vector<IntVec>& lambdas, int nmax = 6,
                                    const OracleLimits& lim = {});

}  // namespace eigenkit
