#pragma once

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "eigenkit/rational.hpp"

namespace eigenkit {

enum class Kind { A, B, C, D, G2, F4 };

std::string kind_name(Kind k);
/// "A", "B", "C", "D", "G2", "F4" (case-insensitive); throws ConfigError.
Kind parse_kind(const std::string& text);

/// Exact root datum of a simple Lie algebra, built from Bourbaki simple roots in the ε-basis.
/// Indices are 0-based internally; the digit-string word format is 1-based.
class RootSystem {
 public:
  Kind kind;
  int rank = 0;
  int ambient_dim = 0;  // number of ε coordinates

  std::vector<RatVec> simple_roots;         // ε coordinates
  std::vector<std::vector<int>> cartan;     // cartan[i][j] = <α_i, α_j^∨>
  std::vector<IntVec> positive_roots;       // simple-root coordinates, sorted by height then lex
  std::vector<RatVec> positive_roots_eps;   // same order, ε coordinates
  std::vector<RatVec> fundamental_weights;  // ε coordinates
  std::vector<RatVec> dual_basis;           // x_i in ε coordinates, α_j(x_i) = δ_ij under the dot product
  IntVec highest_root;                      // simple-root coordinates
  RatVec rho;                               // ε coordinates
  Rational form_scale;                      // <u, v> = form_scale * dot(u, v) on ε coordinates
  RatMatrix killing;                        // ambient_dim x ambient_dim
  RatMatrix gram_roots;                     // <α_i, α_j>
  RatMatrix gram_weights;                   // <ω_i, ω_j>

  std::string name() const;  // e.g. "C3"
  std::size_t num_positive() const { return positive_roots.size(); }

  Rational pairing_eps(const RatVec& u, const RatVec& v) const;
  /// Killing form on vectors given in fundamental-weight coordinates.
  Rational pairing_weights(const RatVec& a, const RatVec& b) const;
  /// Killing form on vectors given in simple-root coordinates.
  Rational pairing_roots(const RatVec& a, const RatVec& b) const;

  RatVec weight_to_eps(const RatVec& a) const;
  RatVec root_to_eps(const RatVec& c) const;
  /// <v, α_i^∨> for each i; exact for v in the span of the roots.
  RatVec eps_to_weight(const RatVec& v) const;
  RatVec root_to_weight(const RatVec& c) const;
  RatVec weight_to_root(const RatVec& a) const;

  /// Index into positive_roots, or -1.
  int positive_root_index(const IntVec& c) const;
  /// True when c (simple-root coordinates) has all entries >= 0 and is nonzero.
  static bool is_positive(const RatVec& c);

  /// <ω_j, β^∨> for the positive root with the given index.
  Rational coroot_coefficient(int root_index, int j) const;
  int height(int root_index) const;

 private:
  friend std::shared_ptr<const RootSystem> build_root_system(Kind, int);
  RatMatrix to_root_coords_;  // (A^T)^{-1}
  std::map<IntVec, int> root_lookup_;
};

using RootSystemPtr = std::shared_ptr<const RootSystem>;

/// Throws ConfigError for unsupported (kind, rank).
RootSystemPtr build_root_system(Kind kind, int rank);

/// Accepts forms like "C3", "G2", "F4", "A1".
RootSystemPtr build_root_system(const std::string& label);

enum class Basis { Weight, Root, Eps };

/// Killing form (normalized so that <θ, θ> = 2) of two vectors in the same basis.
/// Throws UsageError on a dimension mismatch.
Rational killing_pairing(const RootSystem& R, const RatVec& a, const RatVec& b,
                         Basis basis = Basis::Weight);

/// Known |R+| for the type, used as an independent check.
std::size_t expected_positive_count(Kind kind, int rank);

}  // namespace eigenkit
