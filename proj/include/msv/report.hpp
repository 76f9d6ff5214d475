#ifndef MSV_REPORT_HPP
#define MSV_REPORT_HPP

#include <string>

#include "json.hpp"
#include "msv/classify.hpp"

namespace msv {

inline constexpr const char* kSchemaVersion = "1";

using Json = nlohmann::ordered_json;

struct ReportOptions {
  bool diagrams = false;
  bool faces = false;
  bool timings = false;
};

/// Classification fields only; cells are in diagram coordinates.
Json classification_json(const Classification& c);

/// Every 3-face of every component, simplicial or not.
Json faces_json(const Permutation& p);

/// {schema_version, input, classification, [diagrams], [faces], [timings]}.
Json report_json(const Classification& c, const ReportOptions& options = {});

std::string report_text(const Classification& c, const ReportOptions& options = {});

/// N×N grid: '#' diagram cell, '*' permutation 1, '.' otherwise.
std::string render_rothe(const Permutation& p);

/// '*' permutation 1, 'E' essential, 'D' dominant piece, 'P' L' cell,
/// 'L' diagram cell of L, '.' otherwise.
std::string render_regions(const Permutation& p);

/// DOT text of G^π on its diagram rows and columns.
std::string render_graph_dot(const Permutation& p);

}  // namespace msv

#endif
