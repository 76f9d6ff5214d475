#include "msv/crosscheck.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

#include "msv/polyoracle.hpp"

namespace msv {

Fault parse_fault(std::string_view text) {
  if (text == "none") return Fault::None;
  if (text == "ray-sign") return Fault::RaySign;
  if (text == "corollary-off-by-one") return Fault::CorollaryOffByOne;
  throw ParseError("unknown fault '" + std::string(text) + "'");
}

CrosscheckHooks hooks_with_fault(Fault fault) {
  CrosscheckHooks h;
  switch (fault) {
    case Fault::None:
      break;
    case Fault::RaySign:
      h.ray = [](const BipartiteGraph& g, const IndependentSet& a) {
        RayVector r = ray_of(g, a);
        for (auto& x : r.coords) x = -x;
        return r;
      };
      break;
    case Fault::CorollaryOffByOne:
      h.corollary = [](const std::vector<Cell>& chain, int m, int n) {
        return detail::corollary_verdict_shifted(chain, m, n, 1);
      };
      break;
  }
  return h;
}

namespace {

std::string verdict_text(const std::optional<bool>& v) {
  if (!v) return "undecided";
  return *v ? "rigid" : "not rigid";
}

std::string witness_cone(const Permutation& p, const ToricComponent& tc, const RationalCone& oracle) {
  std::ostringstream os;
  os << "  permutation " << p.to_string() << "\n";
  os << "  component rows";
  for (int r : tc.lgraph.rows) os << " " << r;
  os << ", cols";
  for (int c : tc.lgraph.cols) os << " " << c;
  os << "\n  G = K_{" << tc.lgraph.graph.m() << "," << tc.lgraph.graph.n() << "} edges:";
  for (const Edge& e : tc.lgraph.graph.edges()) os << " (" << e.u << "," << e.w << ")";
  os << "\n  essential chain:";
  for (const Cell& c : tc.chain) os << " (" << c.row << "," << c.col << ")";
  os << "\n  oracle rays:";
  for (const auto& g : oracle.generators) os << " " << to_string(g);
  os << "\n";
  return os.str();
}

}  // namespace

std::optional<std::string> crosscheck_permutation(const Permutation& p, bool deep,
                                                  const CrosscheckHooks& hooks,
                                                  std::size_t* face_queries) {
  for (const ToricComponent& tc : toric_components(p)) {
    const BipartiteGraph& g = tc.lgraph.graph;
    const RationalCone oracle = oracle_edge_cone(g);
    auto fail = [&](const std::string& what) {
      return what + "\n" + witness_cone(p, tc, oracle);
    };

    const std::vector<IndependentSet> sets = first_independent_sets(g);
    if (first_independent_sets_from_essentials(tc.chain, g.m(), g.n()) != sets) {
      return fail("essential-cell first independent sets differ from the general enumeration");
    }

    // Γ is injective and hits exactly the oracle's extremal rays.
    std::vector<IntVector> gamma;
    for (const auto& a : sets) gamma.push_back(hooks.ray(g, a).coords);
    const std::set<IntVector> gamma_set(gamma.begin(), gamma.end());
    const std::set<IntVector> oracle_set(oracle.generators.begin(), oracle.generators.end());
    if (gamma_set.size() != gamma.size()) return fail("ray map is not injective");
    if (gamma_set != oracle_set) {
      std::string msg = "ray set differs from the oracle:";
      for (const auto& r : gamma) msg += " " + to_string(r);
      return fail(msg);
    }

    const EdgeCone cone(g);
    const FaceLattice lattice(oracle);
    std::map<IntVector, std::size_t> oracle_index;
    for (std::size_t i = 0; i < oracle.generators.size(); ++i) oracle_index[oracle.generators[i]] = i;

    const bool graph_rigid = rigid_by_faces(cone);
    const bool oracle_rigid = rigid_verdict(oracle);
    const CorollaryResult cor = hooks.corollary(tc.chain, g.m(), g.n());
    if (graph_rigid != oracle_rigid || (cor.rigid && *cor.rigid != oracle_rigid)) {
      return fail("rigidity verdicts disagree: graph " + verdict_text(graph_rigid) + ", corollary " +
                  verdict_text(cor.rigid) + " (" + cor.rule + "), oracle " + verdict_text(oracle_rigid));
    }

    if (!deep) continue;
    const std::size_t k = cone.size();
    auto check = [&](const std::vector<std::size_t>& s) -> std::optional<std::string> {
      if (face_queries) ++*face_queries;
      std::vector<std::size_t> gens;
      for (std::size_t i : s) gens.push_back(oracle_index.at(gamma[i]));
      const OracleFace truth = lattice.smallest_face(gens);
      const auto face = cone.spans_face(s);
      std::string label;
      for (std::size_t i : s) label += " " + describe(sets[i]);
      if (face.has_value() != (truth.dim == s.size())) {
        return fail("face test disagrees for" + label + ": graph says " +
                    (face ? "face" : "no face") + ", oracle smallest face has dim " +
                    std::to_string(truth.dim));
      }
      if (!face) return std::nullopt;
      // Supporting functional: zero exactly on the face's rays.
      std::vector<std::size_t> on;
      for (std::size_t r = 0; r < k; ++r) {
        const Integer v = pair(gamma[r], face->functional);
        if (v < 0) return fail("functional negative on a ray for" + label);
        if (v == 0) on.push_back(oracle_index.at(gamma[r]));
      }
      std::sort(on.begin(), on.end());
      if (on != truth.rays) return fail("functional does not cut out the oracle face for" + label);
      return std::nullopt;
    };
    for (std::size_t a = 0; a < k; ++a) {
      if (auto e = check({a})) return e;
      for (std::size_t b = a + 1; b < k; ++b) {
        if (auto e = check({a, b})) return e;
        if (pair_predicate_applies(cone)) {
          const PairVerdict pv = cone.pair_predicate(a, b);
          if (pv.two_face != cone.spans_face({a, b}).has_value()) {
            return fail("pair rule disagrees for " + describe(sets[a]) + " " + describe(sets[b]) + ": " +
                        pv.reason);
          }
        }
        for (std::size_t c = b + 1; c < k; ++c) {
          if (auto e = check({a, b, c})) return e;
        }
      }
    }
  }
  return std::nullopt;
}

CrosscheckReport run_crosscheck(const CrosscheckOptions& options) {
  CrosscheckReport report;
  std::vector<int> v(static_cast<std::size_t>(options.n));
  std::iota(v.begin(), v.end(), 1);
  do {
    const Permutation p(v);
    ++report.permutations;
    if (!is_toric(p).toric) continue;
    ++report.toric;
    report.components += l_components(regions(rothe_diagram(p)).l).size();
    if (auto failure = crosscheck_permutation(p, options.deep, options.hooks, &report.face_queries)) {
      report.ok = false;
      report.failure = *failure;
      return report;
    }
  } while (std::next_permutation(v.begin(), v.end()));
  return report;
}

}  // namespace msv
