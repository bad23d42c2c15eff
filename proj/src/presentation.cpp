#include "finalg/presentation.hpp"

#include <deque>
#include <sstream>

namespace finalg {

namespace {

// Coset table with lazy union-find coincidence handling. Columns come in
// pairs: 2g acts by generator g, 2g+1 by its inverse.
class CosetTable {
 public:
  CosetTable(int ngens, int cap) : ngens_(ngens), cap_(cap) { new_coset(); }

  int columns() const { return 2 * ngens_; }
  static int inv_col(int col) { return col ^ 1; }

  int find(int c) {
    while (parent_[c] != c) {
      parent_[c] = parent_[parent_[c]];
      c = parent_[c];
    }
    return c;
  }

  int get(int c, int col) {
    int d = tab_[static_cast<size_t>(c) * columns() + col];
    if (d < 0) return -1;
    d = find(d);
    tab_[static_cast<size_t>(c) * columns() + col] = d;
    return d;
  }

  void set(int c, int col, int d) {
    tab_[static_cast<size_t>(c) * columns() + col] = d;
    tab_[static_cast<size_t>(d) * columns() + inv_col(col)] = c;
  }

  int new_coset() {
    if (live_ >= cap_)
      throw CapExceededError("presentation closure exceeded cap of " + std::to_string(cap_) +
                             " elements");
    int c = static_cast<int>(parent_.size());
    parent_.push_back(c);
    tab_.resize(tab_.size() + columns(), -1);
    ++live_;
    return c;
  }

  void coincide(int a, int b) {
    std::deque<std::pair<int, int>> queue{{a, b}};
    while (!queue.empty()) {
      auto [x, y] = queue.front();
      queue.pop_front();
      x = find(x);
      y = find(y);
      if (x == y) continue;
      if (y < x) std::swap(x, y);
      parent_[y] = x;
      --live_;
      for (int col = 0; col < columns(); ++col) {
        int dy = tab_[static_cast<size_t>(y) * columns() + col];
        if (dy < 0) continue;
        dy = find(dy);
        int dx = get(x, col);
        if (dx < 0)
          set(x, col, dy);
        else if (dx != dy)
          queue.emplace_back(dx, dy);
      }
    }
  }

  bool alive(int c) { return find(c) == c; }
  int allocated() const { return static_cast<int>(parent_.size()); }
  int live() const { return live_; }

 private:
  int ngens_;
  int cap_;
  int live_ = 0;
  std::vector<int> parent_;
  std::vector<int> tab_;
};

int column_of(int signed_gen) {
  return signed_gen > 0 ? 2 * (signed_gen - 1) : 2 * (-signed_gen - 1) + 1;
}

// Scans relator r from coset c, defining cosets until the scan closes.
void scan_and_fill(CosetTable& t, int c, const std::vector<int>& cols) {
  for (;;) {
    c = t.find(c);
    int f = c;
    size_t i = 0;   // forward consumed positions 0..i-1
    while (i < cols.size()) {
      int next = t.get(f, cols[i]);
      if (next < 0) break;
      f = next;
      ++i;
    }
    if (i == cols.size()) {
      if (f != c) t.coincide(f, c);
      return;
    }
    int b = c;
    size_t j = cols.size();   // backward consumed positions j..end
    while (j > i) {
      int prev = t.get(b, CosetTable::inv_col(cols[j - 1]));
      if (prev < 0) break;
      b = prev;
      --j;
    }
    if (j == i) {
      // Scans met: both sides sit in front of position i.
      if (f != b) {
        t.coincide(f, b);
        continue;
      }
      return;
    }
    if (j == i + 1) {
      // Deduction: exactly the edge at position i is missing.
      t.set(f, cols[i], b);
      continue;
    }
    int d = t.new_coset();
    t.set(f, cols[i], d);
  }
}

}  // namespace

std::vector<int> parse_relator(const std::string& word,
                               const std::vector<std::string>& generators) {
  auto gen_index = [&](const std::string& name) {
    for (size_t i = 0; i < generators.size(); ++i)
      if (generators[i] == name) return static_cast<int>(i) + 1;
    throw AlgebraError("unknown generator '" + name + "' in relator");
  };
  bool all_single = true;
  for (const auto& g : generators)
    if (g.size() != 1) all_single = false;

  std::vector<int> out;
  std::istringstream in(word);
  std::string tok;
  while (in >> tok) {
    std::string name = tok;
    long long exp = 1;
    auto caret = tok.find('^');
    if (caret != std::string::npos) {
      name = tok.substr(0, caret);
      exp = std::stoll(tok.substr(caret + 1));
    }
    // A bare multi-letter token over single-letter generators is a
    // juxtaposed word like "abab".
    if (caret == std::string::npos && all_single && name.size() > 1) {
      for (char ch : name) out.push_back(gen_index(std::string(1, ch)));
      continue;
    }
    int g = gen_index(name);
    int step = exp >= 0 ? g : -g;
    for (long long i = 0; i < std::llabs(exp); ++i) out.push_back(step);
  }
  return out;
}

FiniteMonoid group_from_presentation(const Presentation& p, int cap) {
  const int ngens = static_cast<int>(p.generators.size());
  if (ngens == 0) {
    return validate_monoid({{0}}, 0, {"1"});
  }
  CosetTable t(ngens, cap);

  std::vector<std::vector<int>> relator_cols;
  for (const auto& r : p.relators) {
    std::vector<int> cols;
    cols.reserve(r.size());
    for (int s : r) cols.push_back(column_of(s));
    if (!cols.empty()) relator_cols.push_back(std::move(cols));
  }

  // Process cosets in definition order until the table is closed and stable.
  const long long allocation_guard = 50LL * cap + 64;
  for (int c0 = 0; c0 < t.allocated(); ++c0) {
    if (t.allocated() > allocation_guard)
      throw CapExceededError("presentation closure churned past the allocation guard");
    if (!t.alive(c0)) continue;
    for (const auto& cols : relator_cols) {
      if (!t.alive(c0)) break;
      scan_and_fill(t, c0, cols);
    }
    if (!t.alive(c0)) continue;
    int c = c0;
    for (int col = 0; col < t.columns(); ++col) {
      c = t.find(c);
      if (t.get(c, col) < 0) {
        int d = t.new_coset();
        t.set(c, col, d);
        for (const auto& cols : relator_cols) scan_and_fill(t, d, cols);
      }
    }
  }

  // Coincidences can invalidate scans done earlier; repeat full passes until
  // the table is stable.
  for (;;) {
    int live_before = t.live();
    for (int c = 0; c < t.allocated(); ++c) {
      if (!t.alive(c)) continue;
      for (const auto& cols : relator_cols) scan_and_fill(t, c, cols);
    }
    if (t.live() == live_before) break;
  }

  // Compact live cosets.
  std::vector<int> live;
  for (int c = 0; c < t.allocated(); ++c)
    if (t.alive(c)) live.push_back(c);
  std::vector<int> index(t.allocated(), -1);
  for (size_t i = 0; i < live.size(); ++i) index[live[i]] = static_cast<int>(i);
  const int n = static_cast<int>(live.size());

  // Representative words over the positive generator columns, breadth-first.
  bool single_letter = true;
  for (const auto& g : p.generators)
    if (g.size() != 1) single_letter = false;
  std::vector<std::vector<int>> word(n);
  std::vector<char> seen(n, 0);
  std::deque<int> bfs{0};
  seen[index[t.find(0)]] = 1;
  while (!bfs.empty()) {
    int c = bfs.front();
    bfs.pop_front();
    for (int g = 0; g < ngens; ++g) {
      int d = t.get(t.find(live[c]), 2 * g);
      if (d < 0) throw AlgebraError("presentation closure left the table incomplete");
      int di = index[d];
      if (!seen[di]) {
        seen[di] = 1;
        word[di] = word[c];
        word[di].push_back(g);
        bfs.push_back(di);
      }
    }
  }
  for (char s : seen)
    if (!s) throw AlgebraError("presented group is not generated by the generators");

  std::vector<int> table(static_cast<size_t>(n) * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      int c = live[i];
      for (int g : word[j]) c = t.get(t.find(c), 2 * g);
      table[static_cast<size_t>(i) * n + j] = index[t.find(c)];
    }

  std::vector<std::string> labels(n);
  for (int i = 0; i < n; ++i) {
    if (word[i].empty()) {
      labels[i] = "1";
      continue;
    }
    std::string s;
    for (size_t k = 0; k < word[i].size(); ++k) {
      if (k && !single_letter) s += ' ';
      s += p.generators[word[i][k]];
    }
    labels[i] = s;
  }

  FiniteMonoid m = validate_monoid_flat(n, 0, std::move(table), std::move(labels));
  if (!as_group(m).ok()) throw AlgebraError("presentation closure did not produce a group");
  return m;
}

}  // namespace finalg
