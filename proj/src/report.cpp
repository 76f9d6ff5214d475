#include "msv/report.hpp"

#include <sstream>

namespace msv {

namespace {

Json cell_json(const Cell& c) { return Json::array({c.row, c.col}); }

Json cells_json(const std::vector<Cell>& cells) {
  Json out = Json::array();
  for (const Cell& c : cells) out.push_back(cell_json(c));
  return out;
}

Json verdict_json(const std::optional<bool>& v) { return v ? Json(*v) : Json(nullptr); }

Json int_vector_json(const IntVector& v) { return Json(to_ll(v)); }

Cell to_diagram(const ComponentClassification& cc, const Cell& local) {
  return {cc.rows.at(static_cast<std::size_t>(local.row - 1)), cc.cols.at(static_cast<std::size_t>(local.col - 1))};
}

Json face_json(const FaceDescriptor& f, const std::vector<std::string>& labels, const EdgeCone* cone) {
  Json rays = Json::array();
  for (std::size_t r : f.rays_on_face) rays.push_back(labels.at(r));
  Json out;
  out["dim"] = f.dim;
  out["rays"] = std::move(rays);
  out["functional"] = int_vector_json(f.functional);
  out["simplicial"] = f.simplicial();
  if (cone) {
    Json sets = Json::array();
    for (std::size_t i : f.defining_sets) sets.push_back(describe(cone->sets().at(i)));
    out["defining_sets"] = std::move(sets);
  }
  return out;
}

std::string verdict_text(const std::optional<bool>& v) {
  if (!v) return "undecided";
  return *v ? "rigid" : "not rigid";
}

}  // namespace

Json classification_json(const Classification& c) {
  Json j;
  j["n"] = c.permutation.size();
  j["toric"] = c.toric;
  j["complexity"] = c.complexity;
  j["dim_y"] = c.dim_y;
  j["trivial"] = c.trivial;
  j["rigid"] = verdict_json(c.rigid);
  j["consistent"] = c.consistent;
  Json verdicts = Json::object();
  for (Method m : {Method::Graph, Method::Corollary, Method::Oracle}) {
    const auto it = c.verdicts.find(m);
    if (it != c.verdicts.end()) verdicts[to_string(m)] = verdict_json(it->second);
  }
  j["method_verdicts"] = std::move(verdicts);
  j["oracle_scope"] = c.oracle_scope.empty() ? Json(nullptr) : Json(c.oracle_scope);

  Json hooks = Json::array();
  for (const HookComponent& h : c.hooks.components) {
    Json hj;
    hj["cells"] = cells_json({h.cells.begin(), h.cells.end()});
    hj["corner"] = h.corner ? cell_json(*h.corner) : Json(nullptr);
    hooks.push_back(std::move(hj));
  }
  j["hooks"] = std::move(hooks);

  Json comps = Json::array();
  for (const ComponentClassification& cc : c.components) {
    Json cj;
    cj["rows"] = cc.rows;
    cj["cols"] = cc.cols;
    cj["m"] = cc.m;
    cj["n"] = cc.n;
    cj["essentials"] = cells_json(cc.essentials);
    cj["ray_labels"] = cc.ray_labels;
    cj["graph"] = verdict_json(cc.graph);
    cj["corollary"] = verdict_json(cc.corollary);
    cj["oracle"] = verdict_json(cc.oracle);
    cj["corollary_rule"] = cc.corollary_rule;
    Json patterns = Json::array();
    for (const PatternWitness& w : cc.patterns) {
      std::vector<Cell> cells;
      for (const Cell& local : w.cells) cells.push_back(to_diagram(cc, local));
      Json wj;
      wj["kind"] = w.kind;
      wj["cells"] = cells_json(cells);
      wj["description"] = w.description;
      patterns.push_back(std::move(wj));
    }
    cj["patterns"] = std::move(patterns);
    Json faces = Json::array();
    for (const FaceDescriptor& f : cc.nonsimplicial_faces) faces.push_back(face_json(f, cc.ray_labels, nullptr));
    cj["nonsimplicial_faces"] = std::move(faces);
    comps.push_back(std::move(cj));
  }
  j["components"] = std::move(comps);
  return j;
}

Json faces_json(const Permutation& p) {
  Json out = Json::array();
  if (!is_toric(p).toric) return out;
  std::size_t index = 0;
  for (const ToricComponent& tc : toric_components(p)) {
    const EdgeCone cone(tc.lgraph.graph);
    std::vector<std::string> labels;
    for (std::size_t i = 0; i < cone.size(); ++i) labels.push_back(ray_label(cone, i));
    for (const FaceDescriptor& f : cone.three_faces()) {
      Json fj;
      fj["component"] = index;
      const Json body = face_json(f, labels, &cone);
      for (const auto& [k, v] : body.items()) fj[k] = v;
      out.push_back(std::move(fj));
    }
    ++index;
  }
  return out;
}

Json report_json(const Classification& c, const ReportOptions& options) {
  Json j;
  j["schema_version"] = kSchemaVersion;
  j["input"] = c.permutation.to_string();
  j["classification"] = classification_json(c);
  if (options.diagrams) {
    j["diagrams"] = {{"rothe", render_rothe(c.permutation)}, {"regions", render_regions(c.permutation)}};
  }
  if (options.faces) j["faces"] = faces_json(c.permutation);
  if (options.timings) {
    Json t = Json::object();
    for (const auto& [phase, ms] : c.timings_ms) t[phase] = ms;
    j["timings"] = std::move(t);
  }
  return j;
}

std::string report_text(const Classification& c, const ReportOptions& options) {
  std::ostringstream os;
  os << "permutation " << c.permutation.to_string() << "\n";
  os << "toric       " << (c.toric ? "yes" : "no") << "\n";
  os << "complexity  " << c.complexity << "\n";
  os << "dim Y       " << c.dim_y << "\n";
  if (c.toric) {
    os << "rigid       " << verdict_text(c.rigid) << (c.trivial ? " (empty L)" : "") << "\n";
    for (const auto& [m, v] : c.verdicts) os << "  " << to_string(m) << ": " << verdict_text(v) << "\n";
    if (!c.consistent) os << "  methods DISAGREE\n";
  }
  std::size_t index = 0;
  for (const ComponentClassification& cc : c.components) {
    os << "component " << index++ << ": K-part sizes " << cc.m << "x" << cc.n << ", " << cc.ray_count
       << " rays, essentials";
    for (const Cell& e : cc.essentials) os << " (" << e.row << "," << e.col << ")";
    os << "\n";
    if (!cc.corollary_rule.empty()) os << "  rule: " << cc.corollary_rule << "\n";
    for (const PatternWitness& w : cc.patterns) os << "  " << w.kind << ": " << w.description << "\n";
    for (const FaceDescriptor& f : cc.nonsimplicial_faces) {
      os << "  non-simplicial 3-face:";
      for (std::size_t r : f.rays_on_face) os << " " << cc.ray_labels.at(r);
      os << "\n";
    }
  }
  if (options.faces) os << "faces\n" << faces_json(c.permutation).dump(2) << "\n";
  if (options.diagrams) os << "\n" << render_rothe(c.permutation) << "\n" << render_regions(c.permutation);
  if (options.timings) {
    for (const auto& [phase, ms] : c.timings_ms) os << "time " << phase << " " << ms << " ms\n";
  }
  return os.str();
}

std::string render_rothe(const Permutation& p) {
  const Diagram d = rothe_diagram(p);
  const int n = p.size();
  std::string out;
  for (int r = 1; r <= n; ++r) {
    for (int c = 1; c <= n; ++c) {
      if (p(c) == r) out += '*';
      else out += d.contains({r, c}) ? '#' : '.';
    }
    out += '\n';
  }
  return out;
}

std::string render_regions(const Permutation& p) {
  const Diagram d = rothe_diagram(p);
  const Diagram dom = dominant_piece(d);
  const std::set<Cell> ess = essential_set(d);
  const Regions reg = regions(d);
  const int n = p.size();
  std::string out;
  for (int r = 1; r <= n; ++r) {
    for (int c = 1; c <= n; ++c) {
      const Cell cell{r, c};
      if (p(c) == r) out += '*';
      else if (ess.count(cell)) out += 'E';
      else if (dom.contains(cell)) out += 'D';
      else if (reg.l_prime.contains(cell)) out += 'P';
      else if (reg.l.contains(cell)) out += 'L';
      else out += '.';
    }
    out += '\n';
  }
  return out;
}

std::string render_graph_dot(const Permutation& p) {
  return to_dot(graph_from_l(regions(rothe_diagram(p)).l).graph, "G");
}

}  // namespace msv
