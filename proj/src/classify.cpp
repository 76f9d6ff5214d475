#include "msv/classify.hpp"

#include <algorithm>
#include <chrono>

#include "msv/polyoracle.hpp"

namespace msv {

const char* to_string(Method m) {
  switch (m) {
    case Method::Graph: return "graph";
    case Method::Corollary: return "corollary";
    case Method::Oracle: return "oracle";
  }
  return "?";
}

bool MethodSet::contains(Method m) const {
  switch (m) {
    case Method::Graph: return graph;
    case Method::Corollary: return corollary;
    case Method::Oracle: return oracle;
  }
  return false;
}

MethodSet MethodSet::parse(std::string_view text) {
  MethodSet s{false, false, false};
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t end = std::min(text.find(',', pos), text.size());
    const std::string_view token = text.substr(pos, end - pos);
    if (token == "graph") {
      s.graph = true;
    } else if (token == "corollary") {
      s.corollary = true;
    } else if (token == "oracle") {
      s.oracle = true;
    } else if (token == "all") {
      s = MethodSet{};
    } else {
      throw ParseError("unknown method '" + std::string(token) + "'");
    }
    pos = end + 1;
  }
  return s;
}

std::vector<ToricComponent> toric_components(const Permutation& p) {
  const Diagram d = rothe_diagram(p);
  const Regions r = regions(d);
  const std::set<Cell> ess = essential_set(d);
  std::vector<ToricComponent> out;
  for (const auto& cells : l_components(r.l)) {
    ToricComponent c;
    c.lgraph = graph_from_l(Diagram{r.l.n, cells});
    std::set<Cell> local_ess;
    for (const Cell& e : ess) {
      if (cells.count(e)) local_ess.insert(e);
    }
    c.chain_cells = sort_essential_chain(local_ess);
    for (const Cell& e : c.chain_cells) c.chain.push_back(c.lgraph.to_local(e));
    out.push_back(std::move(c));
  }
  return out;
}

namespace {

std::string cell_text(const Cell& c) {
  return "(" + std::to_string(c.row) + "," + std::to_string(c.col) + ")";
}

std::vector<PatternWitness> patterns_shifted(const std::vector<Cell>& chain, int m, int n, int shift) {
  if (chain.size() < 3) throw std::invalid_argument("corner patterns need at least three essential cells");
  const int one = 1 + shift;
  const int two = 2 + shift;
  std::vector<PatternWitness> out;
  // Consecutive two-sided sets C^i, C^{i+1} growing by one vertex on each side:
  // x_i = x_{i+1} + 1 and y_i = y_{i-1} + 1.
  for (std::size_t i = 1; i + 1 < chain.size(); ++i) {
    const Cell& prev = chain[i - 1];
    const Cell& cur = chain[i];
    const Cell& next = chain[i + 1];
    if (cur.row == next.row + one && cur.col == prev.col + one) {
      const std::string k = std::to_string(i + 1);
      out.push_back({"adjacent", {prev, cur, next},
                     "(x" + k + ",y" + k + ") = " + cell_text(cur) + " = (x" + std::to_string(i + 2) + "+1,y" +
                         std::to_string(i) + "+1)"});
    }
  }
  // C^i = {x_i+1..m} ⊔ {y_{i-1}+1..n}.
  for (std::size_t i = 1; i < chain.size(); ++i) {
    const int c1 = m - chain[i].row;
    const int c2 = n - chain[i - 1].col;
    if ((c1 == one && c2 == n - two) || (c1 == m - two && c2 == one)) {
      out.push_back({"boundary", {chain[i - 1], chain[i]},
                     "two-sided set with |C1| = " + std::to_string(c1) + ", |C2| = " + std::to_string(c2) +
                         " from " + cell_text(chain[i - 1]) + " and " + cell_text(chain[i])});
    }
  }
  return out;
}

}  // namespace

std::vector<PatternWitness> nonsimplicial_three_face_patterns(const std::vector<Cell>& chain, int m,
                                                              int n) {
  return patterns_shifted(chain, m, n, 0);
}

namespace detail {

CorollaryResult corollary_verdict_shifted(const std::vector<Cell>& chain, int m, int n, int shift) {
  if (chain.empty()) throw std::invalid_argument("empty essential chain");
  const int one = 1 + shift;
  const int two = 2 + shift;
  CorollaryResult r;
  if (chain.size() == 1) {
    if (m != two && n != two) {
      r.rigid = true;
      r.rule = "one essential cell, complete graph with m,n != 2";
    } else {
      r.rule = "one essential cell with m = 2 or n = 2: deferred";
    }
    return r;
  }
  if (chain.size() == 2) {
    const int c1 = m - chain[1].row;
    const int c2 = n - chain[0].col;
    const bool fires = (c1 == one && c2 == n - two) || (c1 == m - two && c2 == one);
    r.rigid = !fires;
    r.rule = "two essential cells, |C1| = " + std::to_string(c1) + ", |C2| = " + std::to_string(c2);
    if (fires) {
      r.witnesses.push_back({"boundary", {chain[0], chain[1]},
                             "two-sided set with |C1| = " + std::to_string(c1) + ", |C2| = " + std::to_string(c2)});
    }
    return r;
  }
  r.witnesses = patterns_shifted(chain, m, n, shift);
  r.rigid = r.witnesses.empty();
  r.rule = std::to_string(chain.size()) + " essential cells, corner patterns";
  return r;
}

}  // namespace detail

CorollaryResult corollary_verdict(const std::vector<Cell>& chain, int m, int n) {
  return detail::corollary_verdict_shifted(chain, m, n, 0);
}

namespace {

class PhaseTimer {
 public:
  PhaseTimer(std::map<std::string, double>& sink, std::string phase)
      : sink_(sink), phase_(std::move(phase)), start_(std::chrono::steady_clock::now()) {}
  ~PhaseTimer() {
    const std::chrono::duration<double, std::milli> d = std::chrono::steady_clock::now() - start_;
    sink_[phase_] += d.count();
  }
  PhaseTimer(const PhaseTimer&) = delete;
  PhaseTimer& operator=(const PhaseTimer&) = delete;

 private:
  std::map<std::string, double>& sink_;
  std::string phase_;
  std::chrono::steady_clock::time_point start_;
};

std::optional<bool> conjunction(const std::vector<std::optional<bool>>& parts) {
  bool all_true = true;
  for (const auto& p : parts) {
    if (p == false) return false;
    if (!p) all_true = false;
  }
  if (all_true) return true;
  return std::nullopt;
}

}  // namespace

Classification classify(const Permutation& p, const MethodSet& methods) {
  Classification c;
  c.permutation = p;
  Regions reg;
  {
    PhaseTimer timer(c.timings_ms, "rothe");
    const ToricTest t = is_toric(p);
    c.toric = t.toric;
    c.hooks = t.witness;
    c.complexity = complexity(p);
    reg = regions(rothe_diagram(p));
    c.dim_y = reg.l_prime.size();
    c.trivial = reg.l.empty();
  }
  if (!c.toric) return c;

  const std::vector<Method> order{Method::Graph, Method::Corollary, Method::Oracle};
  if (c.trivial) {
    for (Method m : order) {
      if (methods.contains(m)) c.verdicts[m] = true;
    }
    c.rigid = true;
    return c;
  }

  std::vector<std::optional<bool>> graph_parts, corollary_parts, oracle_parts;
  for (const ToricComponent& tc : toric_components(p)) {
    ComponentClassification cc;
    const BipartiteGraph& g = tc.lgraph.graph;
    cc.rows = tc.lgraph.rows;
    cc.cols = tc.lgraph.cols;
    cc.m = g.m();
    cc.n = g.n();
    cc.essentials = tc.chain_cells;

    const EdgeCone cone(g);
    cc.ray_count = cone.size();
    for (std::size_t i = 0; i < cone.size(); ++i) cc.ray_labels.push_back(ray_label(cone, i));
    if (methods.graph) {
      PhaseTimer timer(c.timings_ms, "graph");
      for (auto& f : cone.three_faces()) {
        if (!f.simplicial()) cc.nonsimplicial_faces.push_back(std::move(f));
      }
      cc.graph = cc.nonsimplicial_faces.empty();
    }
    if (methods.corollary) {
      PhaseTimer timer(c.timings_ms, "corollary");
      CorollaryResult r = corollary_verdict(tc.chain, g.m(), g.n());
      cc.corollary = r.rigid;
      cc.corollary_rule = std::move(r.rule);
      cc.patterns = std::move(r.witnesses);
    }
    if (methods.oracle) {
      PhaseTimer timer(c.timings_ms, "oracle");
      cc.oracle = rigid_verdict(oracle_edge_cone(g));
    }
    graph_parts.push_back(cc.graph);
    corollary_parts.push_back(cc.corollary);
    oracle_parts.push_back(cc.oracle);
    c.components.push_back(std::move(cc));
  }

  if (methods.graph) c.verdicts[Method::Graph] = conjunction(graph_parts);
  if (methods.corollary) c.verdicts[Method::Corollary] = conjunction(corollary_parts);
  if (methods.oracle) {
    std::optional<bool> factorwise = conjunction(oracle_parts);
    if (c.components.size() == 1) {
      c.oracle_scope = "product";
      c.verdicts[Method::Oracle] = factorwise;
    } else {
      // The product cone is checked directly; per-factor verdicts must agree.
      PhaseTimer timer(c.timings_ms, "oracle");
      try {
        const bool whole = rigid_verdict(oracle_edge_cone(graph_from_l(reg.l).graph));
        c.oracle_scope = "product";
        c.verdicts[Method::Oracle] = whole;
        if (factorwise != whole) c.consistent = false;
      } catch (const OracleLimitError&) {
        c.oracle_scope = "factor-wise";
        c.verdicts[Method::Oracle] = factorwise;
      }
    }
  }

  std::optional<bool> agreed;
  for (Method m : order) {
    const auto it = c.verdicts.find(m);
    if (it == c.verdicts.end() || !it->second) continue;
    if (agreed && *agreed != *it->second) c.consistent = false;
    if (!agreed) agreed = it->second;
  }
  c.rigid = agreed;
  return c;
}

Classification classify_rigidity(const Permutation& p, const MethodSet& methods) {
  Classification c = classify(p, methods);
  if (!c.toric) {
    throw NotToricError(p.to_string() + " is not toric (complexity " + std::to_string(c.complexity) + ")");
  }
  return c;
}

}  // namespace msv
