#ifndef MSV_CROSSCHECK_HPP
#define MSV_CROSSCHECK_HPP

#include <cstddef>
#include <functional>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "msv/classify.hpp"
#include "msv/edgecone.hpp"

namespace msv {

/// The graph-side computations the harness checks against the oracle.
/// Replacing one of them is how negative controls are run.
struct CrosscheckHooks {
  std::function<RayVector(const BipartiteGraph&, const IndependentSet&)> ray = ray_of;
  std::function<CorollaryResult(const std::vector<Cell>&, int, int)> corollary = corollary_verdict;
};

enum class Fault { None, RaySign, CorollaryOffByOne };

/// Parses "ray-sign" / "corollary-off-by-one". Throws ParseError.
Fault parse_fault(std::string_view text);

CrosscheckHooks hooks_with_fault(Fault fault);

struct CrosscheckOptions {
  int n = 4;
  bool deep = false;
  CrosscheckHooks hooks;
};

struct CrosscheckReport {
  bool ok = true;
  std::size_t permutations = 0;
  std::size_t toric = 0;
  std::size_t components = 0;
  std::size_t face_queries = 0;
  std::string failure;  // first failure with its witness cone
};

/// Checks every toric π in S_n, stopping at the first failure:
///   Γ-rays equal the oracle's extremal rays;
///   the essential-cell fast path equals the general enumeration;
///   graph, corollary and oracle rigidity verdicts agree.
/// With `deep`, also every |S| <= 3 face query against the oracle, the
/// supporting functionals and the pair rules.
CrosscheckReport run_crosscheck(const CrosscheckOptions& options);

/// Checks one permutation; returns the failure text if any.
std::optional<std::string> crosscheck_permutation(const Permutation& p, bool deep,
                                                  const CrosscheckHooks& hooks,
                                                  std::size_t* face_queries = nullptr);

}  // namespace msv

#endif
