#ifndef MSV_ROTHE_HPP
#define MSV_ROTHE_HPP

#include <compare>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace msv {

class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A permutation of {1..N} in one-line notation.
class Permutation {
 public:
  /// Throws std::invalid_argument unless `images` is a bijection of {1..N}.
  explicit Permutation(std::vector<int> images);

  static Permutation identity(int n);

  int size() const { return static_cast<int>(images_.size()); }
  /// pi(j) for 1 <= j <= N.
  int operator()(int j) const { return images_.at(static_cast<std::size_t>(j - 1)); }
  const std::vector<int>& images() const { return images_; }

  int inversions() const;

  /// "[2,1,4,3]"
  std::string to_string() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;

 private:
  std::vector<int> images_;
};

/// Accepts "2 1 4 3", "2,1,4,3" or "[2,1,4,3]".
Permutation parse_permutation(std::string_view text);

/// Matrix position, row 1 on top.
struct Cell {
  int row = 0;
  int col = 0;
  friend auto operator<=>(const Cell&, const Cell&) = default;
};

/// A set of cells in an n x n grid.
struct Diagram {
  int n = 0;
  std::set<Cell> cells;

  bool contains(Cell c) const { return cells.count(c) != 0; }
  std::size_t size() const { return cells.size(); }
  bool empty() const { return cells.empty(); }
  friend bool operator==(const Diagram&, const Diagram&) = default;
};

Diagram set_difference(const Diagram& a, const Diagram& b);

struct Regions {
  Diagram nw;       // union of the north-west rectangles of the cells
  Diagram l;        // nw minus the dominant piece
  Diagram l_prime;  // l minus the diagram
};

struct HookComponent {
  std::set<Cell> cells;  // the L' cells of one L-component
  bool is_hook = false;
  std::optional<Cell> corner;
};

struct HookDecomposition {
  std::vector<HookComponent> components;
};

struct ToricTest {
  bool toric = false;
  HookDecomposition witness;
};

/// {(pi(j), i) : i < j, pi(i) > pi(j)}
Diagram rothe_diagram(const Permutation& p);

/// Edge-connected component of `d` containing (1,1); empty if (1,1) is absent.
Diagram dominant_piece(const Diagram& d);

/// Cells with neither the cell below nor the cell to the right in `d`.
std::set<Cell> essential_set(const Diagram& d);

Regions regions(const Diagram& d);

/// Components of `l` under the closure of "shares a row or a column", each
/// sorted, listed by their smallest cell.
std::vector<std::set<Cell>> l_components(const Diagram& l);

ToricTest is_toric(const Permutation& p);

/// |L'| - (rows + cols - components) of L.
int complexity(const Permutation& p);

/// Ordering helpers for essential cells of one L-component: bottom-most first,
/// which makes rows strictly decreasing and columns strictly increasing.
std::vector<Cell> sort_essential_chain(const std::set<Cell>& ess);

}  // namespace msv

#endif
