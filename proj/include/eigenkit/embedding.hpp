#pragma once

#include <string>
#include <utility>
#include <vector>

#include "eigenkit/rational.hpp"
#include "eigenkit/rootsys.hpp"
#include "eigenkit/weyl.hpp"

namespace eigenkit {

enum class EmbeddingCase { CinC, BinB, DChain, G2inF4, SL2inG2 };

std::string case_name(EmbeddingCase c);
/// "c-in-c", "b-in-b", "d-chain", "g2-in-f4", "sl2-in-g2".
EmbeddingCase parse_case(const std::string& text);

/// A sub-root-system M of an ambient root system. Each simple root of M is carried by an
/// orbit of mutually orthogonal ambient roots: a single root for an ordinary subsystem,
/// several for the fixed points of a diagram automorphism. The image is the orbit average and
/// the image reflection is the product of the orbit reflections.
struct SubsystemEmbedding {
  EmbeddingCase tag;
  int r = 0;  // ambient rank parameter
  int s = 0;  // sub rank parameter where it applies
  RootSystemPtr ambient;
  RootSystemPtr sub;
  std::vector<std::vector<IntVec>> orbits;  // per sub simple root, ambient simple-root coordinates
  std::vector<RatVec> simple_images;        // orbit averages, ambient simple-root coordinates
  std::vector<RatVec> complement_images;    // simple roots of the second factor, if any
  std::vector<WeylElement> generators;      // image of each sub simple reflection
  bool folded = false;
  Rational gram_scale;  // <γ_i, γ_j> = gram_scale * <β_i, β_j>
  /// Matched maximal parabolics (sub index, ambient index), 1-based.
  std::vector<std::pair<int, int>> matched;
  /// Intermediate subsystems of a composite construction, as (label, images in ambient coordinates).
  std::vector<std::pair<std::string, std::vector<RatVec>>> stages;

  std::string label() const;
  /// Ambient parabolic matched to sub parabolic Q_k, or 0.
  int matched_ambient(int sub_k) const;
};

/// Parameters: C-in-C and B-in-B use (r, s) with 1 <= s < r; D-chain uses r >= 3 (D_r over B_{r-2});
/// G2-in-F4 and SL2-in-G2 ignore them. Throws ConfigError on invalid parameters.
SubsystemEmbedding build_embedding(EmbeddingCase c, int r = 0, int s = 0);

/// i-th coordinate 2<λ, γ_i>/<γ_i, γ_i>, computed with the ambient form.
RatVec restrict_weight(const SubsystemEmbedding& E, const RatVec& lambda);

/// Product of generator images along a reduced word of w.
WeylElement embed_element(const SubsystemEmbedding& E, const WeylElement& w);

struct CosetImage {
  WeylElement raw;   // embed_element
  WeylElement rep;   // minimal representative of raw * W_P
  bool raw_minimal;  // raw already lies in W^P
};

/// Image of w in W_M^{Q_k} in W^{P_j} for the matched pair; throws UsageError when
/// (sub_k, ambient_k) is not a matched pair or w is not in W_M^{Q_k}.
CosetImage embed_coset(const SubsystemEmbedding& E, const WeylElement& w, int sub_k, int ambient_k);

/// Every Levi generator of Q_k maps into W_{P_j} (the coset map is well defined).
bool levi_generators_compatible(const SubsystemEmbedding& E, int sub_k, int ambient_k);

struct DualCommutationRow {
  std::string sub_word, sub_dual, image, image_dual, dual_image;
  bool commutes;
};

struct DualCommutationReport {
  int sub_k = 0, ambient_k = 0;
  std::vector<DualCommutationRow> rows;
  bool all_commute() const;
};

DualCommutationReport verify_dual_commutes(const SubsystemEmbedding& E, int sub_k, int ambient_k);

}  // namespace eigenkit
