#include "msv/rothe.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <map>
#include <numeric>

namespace msv {

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
  const int n = size();
  if (n == 0) throw std::invalid_argument("permutation is empty");
  std::vector<bool> seen(static_cast<std::size_t>(n) + 1, false);
  for (int v : images_) {
    if (v < 1 || v > n) {
      throw std::invalid_argument("value " + std::to_string(v) + " outside 1.." +
                                  std::to_string(n));
    }
    if (seen[static_cast<std::size_t>(v)]) {
      throw std::invalid_argument("value " + std::to_string(v) + " repeated");
    }
    seen[static_cast<std::size_t>(v)] = true;
  }
}

Permutation Permutation::identity(int n) {
  std::vector<int> v(static_cast<std::size_t>(n));
  std::iota(v.begin(), v.end(), 1);
  return Permutation(std::move(v));
}

int Permutation::inversions() const {
  int count = 0;
  for (std::size_t i = 0; i < images_.size(); ++i) {
    for (std::size_t j = i + 1; j < images_.size(); ++j) {
      if (images_[i] > images_[j]) ++count;
    }
  }
  return count;
}

std::string Permutation::to_string() const {
  std::string s = "[";
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(images_[i]);
  }
  return s + "]";
}

Permutation parse_permutation(std::string_view text) {
  std::string body(text);
  const auto first = body.find_first_not_of(" \t\r\n");
  const auto last = body.find_last_not_of(" \t\r\n");
  if (first == std::string::npos) throw ParseError("empty permutation");
  body = body.substr(first, last - first + 1);
  if (body.front() == '[') {
    if (body.back() != ']') throw ParseError("unbalanced bracket in '" + body + "'");
    body = body.substr(1, body.size() - 2);
  }

  std::vector<int> values;
  std::size_t pos = 0;
  while (pos < body.size()) {
    const char c = body[pos];
    if (c == ',' || std::isspace(static_cast<unsigned char>(c))) {
      ++pos;
      continue;
    }
    std::size_t end = pos;
    while (end < body.size() && body[end] != ',' &&
           !std::isspace(static_cast<unsigned char>(body[end]))) {
      ++end;
    }
    const std::string_view token(body.data() + pos, end - pos);
    int value = 0;
    const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc() || ptr != token.data() + token.size()) {
      throw ParseError("non-integer token '" + std::string(token) + "'");
    }
    values.push_back(value);
    pos = end;
  }
  if (values.empty()) throw ParseError("empty permutation");
  try {
    return Permutation(std::move(values));
  } catch (const std::invalid_argument& e) {
    throw ParseError(std::string("not a bijection: ") + e.what());
  }
}

Diagram set_difference(const Diagram& a, const Diagram& b) {
  Diagram out{a.n, {}};
  std::set_difference(a.cells.begin(), a.cells.end(), b.cells.begin(), b.cells.end(),
                      std::inserter(out.cells, out.cells.end()));
  return out;
}

Diagram rothe_diagram(const Permutation& p) {
  Diagram d{p.size(), {}};
  for (int j = 1; j <= p.size(); ++j) {
    for (int i = 1; i < j; ++i) {
      if (p(i) > p(j)) d.cells.insert({p(j), i});
    }
  }
  return d;
}

Diagram dominant_piece(const Diagram& d) {
  Diagram dom{d.n, {}};
  if (!d.contains({1, 1})) return dom;
  std::vector<Cell> stack{{1, 1}};
  while (!stack.empty()) {
    const Cell c = stack.back();
    stack.pop_back();
    if (!d.contains(c) || !dom.cells.insert(c).second) continue;
    stack.push_back({c.row + 1, c.col});
    stack.push_back({c.row - 1, c.col});
    stack.push_back({c.row, c.col + 1});
    stack.push_back({c.row, c.col - 1});
  }
  return dom;
}

std::set<Cell> essential_set(const Diagram& d) {
  std::set<Cell> ess;
  for (const Cell& c : d.cells) {
    if (!d.contains({c.row + 1, c.col}) && !d.contains({c.row, c.col + 1})) ess.insert(c);
  }
  return ess;
}

Regions regions(const Diagram& d) {
  Regions r;
  r.nw.n = d.n;
  for (const Cell& c : d.cells) {
    for (int a = 1; a <= c.row; ++a) {
      for (int b = 1; b <= c.col; ++b) r.nw.cells.insert({a, b});
    }
  }
  r.l = set_difference(r.nw, dominant_piece(d));
  r.l_prime = set_difference(r.l, d);
  return r;
}

std::vector<std::set<Cell>> l_components(const Diagram& l) {
  // Union-find over row and column labels: each cell joins its row to its column.
  std::map<int, int> parent;  // rows stored as +r, columns as -c
  auto find = [&](int x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  };
  for (const Cell& c : l.cells) {
    parent.try_emplace(c.row, c.row);
    parent.try_emplace(-c.col, -c.col);
  }
  for (const Cell& c : l.cells) {
    const int a = find(c.row);
    const int b = find(-c.col);
    if (a != b) parent[a] = b;
  }
  std::map<int, std::set<Cell>> groups;
  for (const Cell& c : l.cells) groups[find(c.row)].insert(c);

  std::vector<std::set<Cell>> out;
  for (auto& [root, cells] : groups) out.push_back(std::move(cells));
  std::sort(out.begin(), out.end(),
            [](const auto& a, const auto& b) { return *a.begin() < *b.begin(); });
  return out;
}

namespace {

HookComponent classify_hook(std::set<Cell> cells) {
  HookComponent h;
  h.cells = std::move(cells);
  if (h.cells.empty()) return h;
  int min_row = h.cells.begin()->row;
  int min_col = h.cells.begin()->col;
  for (const Cell& c : h.cells) {
    min_row = std::min(min_row, c.row);
    min_col = std::min(min_col, c.col);
  }
  const Cell corner{min_row, min_col};
  if (!h.cells.count(corner)) return h;
  h.corner = corner;
  h.is_hook = std::all_of(h.cells.begin(), h.cells.end(), [&](const Cell& c) {
    return c.row == corner.row || c.col == corner.col;
  });
  return h;
}

}  // namespace

ToricTest is_toric(const Permutation& p) {
  const Diagram d = rothe_diagram(p);
  const Regions r = regions(d);
  ToricTest t;
  t.toric = true;
  for (const auto& comp : l_components(r.l)) {
    std::set<Cell> primed;
    for (const Cell& c : comp) {
      if (r.l_prime.contains(c)) primed.insert(c);
    }
    HookComponent h = classify_hook(std::move(primed));
    t.toric = t.toric && h.is_hook;
    t.witness.components.push_back(std::move(h));
  }
  return t;
}

int complexity(const Permutation& p) {
  const Regions r = regions(rothe_diagram(p));
  if (r.l.empty()) return 0;
  std::set<int> rows, cols;
  for (const Cell& c : r.l.cells) {
    rows.insert(c.row);
    cols.insert(c.col);
  }
  const int k = static_cast<int>(l_components(r.l).size());
  return static_cast<int>(r.l_prime.size()) -
         (static_cast<int>(rows.size()) + static_cast<int>(cols.size()) - k);
}

std::vector<Cell> sort_essential_chain(const std::set<Cell>& ess) {
  std::vector<Cell> chain(ess.begin(), ess.end());
  std::sort(chain.begin(), chain.end(), [](const Cell& a, const Cell& b) {
    return a.row != b.row ? a.row > b.row : a.col < b.col;
  });
  return chain;
}

}  // namespace msv
