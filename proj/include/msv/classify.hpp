#ifndef MSV_CLASSIFY_HPP
#define MSV_CLASSIFY_HPP

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "msv/bigraph.hpp"
#include "msv/edgecone.hpp"
#include "msv/rothe.hpp"

namespace msv {

class NotToricError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

enum class Method { Graph, Corollary, Oracle };

const char* to_string(Method m);

struct MethodSet {
  bool graph = true;
  bool corollary = true;
  bool oracle = true;

  bool contains(Method m) const;
  /// "graph,corollary,oracle" or any nonempty subset. Throws ParseError.
  static MethodSet parse(std::string_view text);
};

/// One connected component of L(π), with G^π restricted to it.
struct ToricComponent {
  LGraph lgraph;
  std::vector<Cell> chain;        // essential cells in local coordinates, bottom first
  std::vector<Cell> chain_cells;  // the same cells in diagram coordinates
};

/// Components of L(π) in the order of l_components.
std::vector<ToricComponent> toric_components(const Permutation& p);

struct PatternWitness {
  std::string kind;         // "adjacent" or "boundary"
  std::vector<Cell> cells;  // local coordinates
  std::string description;
};

/// Corner patterns of an essential chain (|chain| >= 3) that force a
/// non-simplicial 3-face. With C^i = {x_i+1..m} ⊔ {y_{i-1}+1..n}:
///   adjacent: x_i = x_{i+1} + 1 and y_i = y_{i-1} + 1, i.e. C^{i+1} exceeds
///             C^i by one vertex in U1 and falls short by one in U2;
///   boundary: some C^i has |C1| = 1, |C2| = n - 2 or |C1| = m - 2, |C2| = 1.
/// Throws std::invalid_argument for shorter chains.
std::vector<PatternWitness> nonsimplicial_three_face_patterns(const std::vector<Cell>& chain, int m,
                                                              int n);

struct CorollaryResult {
  std::optional<bool> rigid;  // absent when the rule does not decide
  std::string rule;
  std::vector<PatternWitness> witnesses;
};

/// Rigidity read off the essential chain of one component.
CorollaryResult corollary_verdict(const std::vector<Cell>& chain, int m, int n);

namespace detail {
/// corollary_verdict with every size threshold moved by `shift`; shift != 0 is
/// only used to check that the cross-check harness notices a broken rule.
CorollaryResult corollary_verdict_shifted(const std::vector<Cell>& chain, int m, int n, int shift);
}  // namespace detail

struct ComponentClassification {
  std::vector<int> rows;  // diagram rows of local U1 vertices
  std::vector<int> cols;
  int m = 0;
  int n = 0;
  std::vector<Cell> essentials;  // diagram coordinates, bottom first
  std::size_t ray_count = 0;
  std::optional<bool> graph;
  std::optional<bool> corollary;
  std::optional<bool> oracle;
  std::string corollary_rule;
  std::vector<PatternWitness> patterns;
  std::vector<FaceDescriptor> nonsimplicial_faces;
  std::vector<std::string> ray_labels;
};

struct Classification {
  Permutation permutation = Permutation::identity(1);
  bool toric = false;
  int complexity = 0;
  std::size_t dim_y = 0;
  bool trivial = false;  // L(π) empty
  std::optional<bool> rigid;
  std::map<Method, std::optional<bool>> verdicts;
  bool consistent = true;
  std::string oracle_scope;  // "product", "factor-wise" or empty
  std::vector<ComponentClassification> components;
  HookDecomposition hooks;
  std::map<std::string, double> timings_ms;  // wall time per phase
};

/// Toricness and complexity always; rigidity by the requested methods when
/// toric. Disagreeing verdicts clear `consistent`.
Classification classify(const Permutation& p, const MethodSet& methods = {});

/// classify, but throws NotToricError for non-toric input.
Classification classify_rigidity(const Permutation& p, const MethodSet& methods = {});

}  // namespace msv

#endif
