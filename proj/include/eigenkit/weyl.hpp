#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "eigenkit/rational.hpp"
#include "eigenkit/rootsys.hpp"

namespace eigenkit {

/// A Weyl group element. Its identity is the action; `word` is the lexicographically
/// smallest reduced word (0-based simple indices, leftmost factor first).
struct WeylElement {
  int rank = 0;
  std::vector<int> action;       // rank x rank, row-major, on fundamental-weight coordinates
  std::vector<int> root_action;  // rank x rank, row-major, on simple-root coordinates
  IntVec rho_image;              // w(ρ) in fundamental-weight coordinates; determines w
  IntVec word;
  int length = 0;

  bool operator==(const WeylElement& o) const { return rho_image == o.rho_image; }
  bool operator<(const WeylElement& o) const { return rho_image < o.rho_image; }
};

/// Sort key used for every ordered list of elements: (length, word).
bool canonical_less(const WeylElement& a, const WeylElement& b);

WeylElement identity_element(const RootSystem& R);
WeylElement simple_reflection(const RootSystem& R, int i);
/// Accepts any (not necessarily reduced) word.
WeylElement element_from_word(const RootSystem& R, const IntVec& word);
/// The unique element with w(ρ) = v; throws UsageError when v is not in the orbit of ρ.
WeylElement element_from_rho_image(const RootSystem& R, const IntVec& v);
WeylElement multiply(const RootSystem& R, const WeylElement& a, const WeylElement& b);
WeylElement inverse(const RootSystem& R, const WeylElement& w);
WeylElement longest_element(const RootSystem& R);
/// Reflection in a positive root given in simple-root coordinates.
WeylElement root_reflection(const RootSystem& R, const IntVec& beta);

RatVec apply_to_weight(const WeylElement& w, const RatVec& a);
RatVec apply_to_root(const WeylElement& w, const RatVec& c);
IntVec apply_to_root(const WeylElement& w, const IntVec& c);
/// w(α_i) < 0.
bool is_right_descent(const WeylElement& w, int i);
/// Number of positive roots sent to negative roots (independent of the word).
int inversion_count(const RootSystem& R, const WeylElement& w);

/// Digit-string words: "43234" means s4 s3 s2 s3 s4; "e" (or "") is the identity.
IntVec parse_word(const std::string& digits, int rank);
std::string format_word(const IntVec& word);

struct ParabolicSpec {
  RootSystemPtr root_system;
  std::vector<int> excluded;     // 0-based simple indices not in the Levi
  std::vector<int> levi_simple;  // 0-based complement

  bool in_levi(int i) const;
  /// Single excluded index (1-based) for maximal parabolics, "P1", "P2+4" otherwise.
  std::string label() const;
};

/// `k` is 1-based, as in P_k.
ParabolicSpec maximal_parabolic(RootSystemPtr R, int k);
ParabolicSpec parabolic_from_excluded(RootSystemPtr R, std::vector<int> excluded_zero_based);

struct WeylLimits {
  std::size_t max_group_order = 200000;
  int max_rank = 6;
};

/// Whole group, sorted by (length, word). Throws ResourceError when the order exceeds the cap.
std::vector<WeylElement> generate_weyl_group(const RootSystem& R, const WeylLimits& limits = {});
/// All elements of length <= max_length, sorted by (length, word).
std::vector<WeylElement> elements_up_to_length(const RootSystem& R, int max_length,
                                               std::size_t cap = 2000000);

bool is_minimal_rep(const ParabolicSpec& P, const WeylElement& w);
WeylElement minimal_rep(const ParabolicSpec& P, const WeylElement& w);
/// W^P sorted by (length, word), built breadth-first by right multiplication.
std::vector<WeylElement> minimal_coset_reps(const ParabolicSpec& P);
/// Minimal representative of w0 w W_P; throws UsageError when w is not in W^P.
WeylElement dual_rep(const ParabolicSpec& P, const WeylElement& w);
/// |R+| - |R_L+|.
int flag_dimension(const ParabolicSpec& P);

/// Exact polynomial identity Σ_{W^P} q^l(w) * W_P(q) = W(q), the latter from degree data.
bool poincare_check(const ParabolicSpec& P);

}  // namespace eigenkit
