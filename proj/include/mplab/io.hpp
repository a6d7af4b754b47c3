#pragma once

// Wire formats: polytope JSON, flag-point literals, sample CSV, SVG plots.

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "mplab/liedata.hpp"
#include "mplab/momentpoly.hpp"
#include "mplab/numlab.hpp"
#include "mplab/polytope.hpp"

namespace mplab {

/// Thrown for malformed literals and documents.
class ParseError : public std::invalid_argument {
 public:
  explicit ParseError(const std::string& what) : std::invalid_argument(what) {}
};

/// "p", "-p" or "p/q" with q != 0.
Rational parse_rational(std::string_view s);

/// {"dim": d, "vertices": [[n1, d1, ..., n_d, d_d], ...]} with decimal
/// strings; vertices in lexicographic order.
nlohmann::json polytope_to_json(const RationalPolytope& p);
/// Inverse of polytope_to_json; the vertex list is re-canonicalized.
RationalPolytope polytope_from_json(const nlohmann::json& j);

/// Grammar (whitespace ignored):
///   point    = pair ";" pair
///   pair     = gauss "," gauss
///   gauss    = rational [ ("+" | "-") [rational] ["*"] "i" ]
///            | [ "-" ] [rational] ["*"] "i"
///   rational = [ "-" ] digits [ "/" digits ]
/// e.g. "0/1,1/1;1/1,1/1" or "1+1/2i, 3; 1, -i" (bare "i" means 1i).
FlagPoint parse_flag_point(std::string_view literal);

/// "negation", "identity", "swap", or a JSON matrix literal such as "[[-1]]"
/// whose entries are integers or rational strings.
InvolutionSpec parse_involution(const std::string& tag, std::size_t rank = 1);

inline constexpr const char* kSampleCsvHeader = "a1re,a1im,c1re,c1im,a2re,a2im,c2re,c2im,phi1,phi2,phi3,norm";

void write_samples_csv(std::ostream& os, const SampleSet& s);
/// Phi values (columns phi1..phi3) of a sample CSV.
std::vector<R3Vector> read_samples_csv(std::istream& is);

struct LabeledPolytope {
  std::string label;
  RationalPolytope polytope;
};

/// One row per polytope on a shared alpha-axis. All polytopes must be 1-D.
std::string render_polytopes_svg(const std::vector<LabeledPolytope>& rows);
/// Scatter of the (phi1, phi3) projection, chamber ray drawn along +phi3.
std::string render_samples_svg(const std::vector<R3Vector>& phis);

}  // namespace mplab
