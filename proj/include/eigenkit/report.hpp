#pragma once

#include <array>
#include <string>
#include <vector>

#include "json.hpp"

#include "eigenkit/eigencone.hpp"
#include "eigenkit/rootsys.hpp"
#include "eigenkit/schubert.hpp"

namespace eigenkit {

using Json = nlohmann::ordered_json;

inline constexpr const char* kReportSchema = "eigenkit-report";
inline constexpr int kReportVersion = 1;

/// "p/q", or "p" for integers.
std::string rational_string(const Rational& q);
Rational parse_rational(const std::string& text);

Json int_vec_json(const IntVec& v);
Json rat_vec_json(const RatVec& v);

Json root_system_json(const RootSystem& R);
/// W^P with lengths, codimensions, duals and χ.
Json coset_table_json(const FlagVariety& F);
Json cohom_class_json(const CohomClass& c);

Json ineq_system_json(const IneqSystem& S);
/// Inverse of ineq_system_json; the group is rebuilt from its kind and rank.
IneqSystem ineq_system_from_json(const Json& j);
std::string ineq_system_csv(const IneqSystem& S);
std::string ineq_system_table(const IneqSystem& S);

/// Fixed-width text table, columns separated by two spaces.
std::string format_columns(const std::vector<std::string>& header, const std::vector<std::vector<std::string>>& rows);

/// The G2-in-F4 coset data: W^{Q1}, W^{Q2} with duals, their images in W^{P4}, W^{P1}, and the
/// duals of the images.
struct G2F4Tables {
  std::vector<std::array<std::string, 4>> cells;   // Q1 word, dual, Q2 word, dual
  std::vector<std::array<std::string, 4>> images;  // Q1 word, image in P4, Q2 word, image in P1
  std::vector<std::array<std::string, 4>> f4;      // P4 image, dual, P1 image, dual
  bool duals_commute = false;
};
G2F4Tables g2f4_tables(const FlagBuildOptions& opt = {});
std::string render_g2f4_tables(const G2F4Tables& t);
Json g2f4_tables_json(const G2F4Tables& t);

}  // namespace eigenkit
