#include "finalg/templates.hpp"

#include <algorithm>
#include <sstream>

namespace finalg {

namespace {

// Letter sequence form: (which, exp) with which 0 = x, 1 = y, all exps
// nonzero, no two adjacent letters equal.
using Syllables = std::vector<std::pair<int, int>>;

Syllables to_syllables(const std::vector<std::pair<int, int>>& pairs) {
  Syllables out;
  auto push = [&](int which, int exp) {
    if (exp == 0) return;
    if (!out.empty() && out.back().first == which)
      out.back().second += exp;
    else
      out.emplace_back(which, exp);
    if (!out.empty() && out.back().second == 0) out.pop_back();
  };
  for (auto [k, l] : pairs) {
    push(0, k);
    push(1, l);
  }
  // Merges can expose new adjacencies only at the seam just handled, so a
  // single pass with merge-on-push is already canonical.
  return out;
}

std::vector<std::pair<int, int>> to_pairs(const Syllables& s) {
  std::vector<std::pair<int, int>> out;
  size_t i = 0;
  while (i < s.size()) {
    int k = 0, l = 0;
    if (s[i].first == 0) {
      k = s[i].second;
      ++i;
      if (i < s.size() && s[i].first == 1) {
        l = s[i].second;
        ++i;
      }
    } else {
      l = s[i].second;
      ++i;
    }
    out.emplace_back(k, l);
  }
  return out;
}

}  // namespace

SplittingTemplate normalize(const std::vector<std::pair<int, int>>& raw) {
  long long ks = 0, ls = 0;
  for (auto [k, l] : raw) {
    ks += k;
    ls += l;
  }
  if (ks != 1 || ls != 1)
    throw BadSumsError("template exponent sums must be (1,1), got (" + std::to_string(ks) + "," +
                           std::to_string(ls) + ")",
                       ks, ls);
  return SplittingTemplate{to_pairs(to_syllables(raw))};
}

std::string format_template(const SplittingTemplate& t) {
  std::string s;
  auto put = [&](char letter, int exp) {
    if (exp == 0) return;
    if (!s.empty()) s += ' ';
    s += letter;
    if (exp != 1) s += "^" + std::to_string(exp);
  };
  for (auto [k, l] : t.word) {
    put('x', k);
    put('y', l);
  }
  return s;
}

SplittingTemplate parse_template(const std::string& text) {
  std::vector<std::pair<int, int>> raw;
  std::istringstream in(text);
  std::string tok;
  while (in >> tok) {
    char letter = tok[0];
    if (letter != 'x' && letter != 'y')
      throw AlgebraError("template letters must be x or y, got '" + tok + "'");
    int exp = 1;
    if (tok.size() > 1) {
      if (tok[1] != '^') throw AlgebraError("bad template token '" + tok + "'");
      exp = std::stoi(tok.substr(2));
    }
    if (letter == 'x')
      raw.emplace_back(exp, 0);
    else
      raw.emplace_back(0, exp);
  }
  return normalize(raw);
}

SplittingTemplate direct_template() { return normalize({{1, 1}}); }

SplittingTemplate simple_template() { return normalize({{-1, 1}, {2, 0}}); }

SplittingTemplate commutator_squared_template() {
  // x y x^-1 y^-1 x y x^-1 y^-1 x y evaluates to [x,y]^2 x y in every group.
  return normalize({{1, 1}, {-1, -1}, {1, 1}, {-1, -1}, {1, 1}});
}

std::vector<SplittingTemplate> enumerate_templates(int max_syllables, int max_exp) {
  std::vector<SplittingTemplate> out;
  Syllables current;

  // Alternating syllables with nonzero exponents in [-E, E]; prune on the
  // reachable exponent-sum window.
  auto rec = [&](auto&& self, int which, long long xsum, long long ysum) -> void {
    int n = static_cast<int>(current.size());
    int remaining = max_syllables - n;
    int rx = (remaining + (which == 0 ? 1 : 0)) / 2;
    int ry = (remaining + (which == 1 ? 1 : 0)) / 2;
    if (std::llabs(1 - xsum) > static_cast<long long>(rx) * max_exp) return;
    if (std::llabs(1 - ysum) > static_cast<long long>(ry) * max_exp) return;
    if (xsum == 1 && ysum == 1 && !current.empty()) out.push_back({to_pairs(current)});
    if (remaining == 0) return;
    for (int e = -max_exp; e <= max_exp; ++e) {
      if (e == 0) continue;
      current.emplace_back(which, e);
      self(self, 1 - which, xsum + (which == 0 ? e : 0), ysum + (which == 1 ? e : 0));
      current.pop_back();
    }
  };
  rec(rec, 0, 0, 0);
  rec(rec, 1, 0, 0);

  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

InducedOperation induced_op(const FiniteGroup& g, const SplittingTemplate& t) {
  const int n = g.size();
  std::vector<int> star(static_cast<size_t>(n) * n);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      int r = g.identity();
      for (auto [k, l] : t.word) {
        if (k != 0) r = g.at(r, pow_group(g, x, k));
        if (l != 0) r = g.at(r, pow_group(g, y, l));
      }
      star[static_cast<size_t>(x) * n + y] = r;
    }
  for (int x = 0; x < n; ++x) {
    if (star[static_cast<size_t>(x) * n + g.identity()] != x ||
        star[static_cast<size_t>(g.identity()) * n + x] != x)
      throw AlgebraError("induced operation violates the unit laws");
  }
  return InducedOperation{g, t, std::move(star)};
}

std::vector<int> commutator_power_op(const FiniteGroup& g, long long k) {
  const int n = g.size();
  std::vector<int> star(static_cast<size_t>(n) * n);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      star[static_cast<size_t>(x) * n + y] =
          g.at(g.at(pow_group(g, commutator(g, x, y), k), x), y);
  return star;
}

bool is_latin_square(const std::vector<int>& table, int n) {
  for (int i = 0; i < n; ++i) {
    std::vector<int> row(n, 0), col(n, 0);
    for (int j = 0; j < n; ++j) {
      ++row[table[static_cast<size_t>(i) * n + j]];
      ++col[table[static_cast<size_t>(j) * n + i]];
    }
    for (int v = 0; v < n; ++v)
      if (row[v] != 1 || col[v] != 1) return false;
  }
  return true;
}

TemplateSpecialVerdict special_wrt_table(const FiniteGroup& g, const std::vector<int>& star) {
  const int n = g.size();
  TemplateSpecialVerdict out;
  std::vector<int> q(static_cast<size_t>(n) * n, -1);
  for (int y = 0; y < n; ++y) {
    std::vector<int> hit(n, 0);
    for (int x = 0; x < n; ++x) {
      int t = star[static_cast<size_t>(x) * n + y];
      ++hit[t];
      q[static_cast<size_t>(t) * n + y] = x;
    }
    for (int t = 0; t < n; ++t)
      if (hit[t] != 1) {
        out.witness_y = y;
        return out;
      }
  }
  out.special = true;
  out.q = std::move(q);

  auto qat = [&](int x, int y) { return out.q[static_cast<size_t>(x) * n + y]; };
  auto sat = [&](int x, int y) { return star[static_cast<size_t>(x) * n + y]; };
  out.iss1 = out.iss2 = out.iss3 = out.iss4 = true;
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      if (sat(qat(x, y), y) != x) out.iss1 = false;
      if (qat(sat(x, y), y) != x) out.iss2 = false;
    }
  for (int x = 0; x < n; ++x) {
    if (qat(x, g.identity()) != x) out.iss3 = false;
    if (qat(x, x) != g.identity()) out.iss4 = false;
  }
  return out;
}

TemplateSpecialVerdict special_wrt(const FiniteGroup& g, const SplittingTemplate& t) {
  return special_wrt_table(g, induced_op(g, t).star);
}

std::vector<int> q_candidates(const FiniteGroup& g, const std::vector<int>& star, int x, int y) {
  std::vector<int> out;
  for (int z = 0; z < g.size(); ++z)
    if (star[static_cast<size_t>(z) * g.size() + y] == x) out.push_back(z);
  return out;
}

EngelReport is_2engel(const FiniteGroup& g) {
  EngelReport r;
  auto fail = [](EngelCondition& c, int x, int y, long long k = 0) {
    if (c.holds) c.witness = {x, y, k};
    c.holds = false;
  };
  const long long exp = exponent(g);
  for (int x = 0; x < g.size(); ++x)
    for (int y = 0; y < g.size(); ++y) {
      int c = commutator(g, x, y);
      if (commutator(g, c, y) != g.identity()) fail(r.nested_y, x, y);
      if (commutator(g, c, x) != g.identity()) fail(r.nested_x, x, y);
      if (commutator(g, conjugate(g, y, x), x) != g.identity()) fail(r.conj, x, y);
      int cinv = g.inverse[c];
      if (commutator(g, x, g.inverse[y]) != cinv) fail(r.inv_y, x, y);
      if (commutator(g, g.inverse[x], y) != cinv) fail(r.inv_x, x, y);
      for (long long k = 0; k < exp; ++k) {
        int ck = pow_group(g, c, k);
        if (commutator(g, x, pow_group(g, y, k)) != ck) fail(r.pow_y, x, y, k);
        if (commutator(g, pow_group(g, x, k), y) != ck) fail(r.pow_x, x, y, k);
      }
    }
  return r;
}

StarCoefficient engel_star_coefficient(const FiniteGroup& g, const SplittingTemplate& t) {
  InducedOperation op = induced_op(g, t);
  const long long exp = exponent(g);
  std::vector<char> alive(static_cast<size_t>(exp), 1);
  long long alive_count = exp;
  StarCoefficient out;
  for (int x = 0; x < g.size(); ++x)
    for (int y = 0; y < g.size(); ++y) {
      int c = commutator(g, x, y);
      int xy = g.at(x, y);
      for (long long k = 0; k < exp; ++k) {
        if (!alive[k]) continue;
        if (g.at(pow_group(g, c, k), xy) != op.at(x, y)) {
          alive[k] = 0;
          if (--alive_count == 0) {
            out.witness = {x, y};
            return out;
          }
        }
      }
    }
  for (long long k = 0; k < exp; ++k)
    if (alive[k]) {
      out.found = true;
      out.k = k;
      return out;
    }
  return out;
}

TemplateSweep special_for_all_templates(const FiniteGroup& g, int max_syllables, int max_exp) {
  TemplateSweep out;
  out.group_is_2engel = is_2engel(g).is_2engel();

  for (const auto& t : enumerate_templates(max_syllables, max_exp)) {
    bool special = special_wrt(g, t).special;
    out.bounded.emplace_back(t, special);
    if (!special) out.all_bounded_special = false;
  }

  // Every template operation on a 2-Engel group collapses to [x,y]^k x y,
  // with k only mattering modulo the exponent of the subgroup generated by
  // the commutator values; sweeping those k is a complete case split.
  std::vector<int> comms;
  for (int x = 0; x < g.size(); ++x)
    for (int y = 0; y < g.size(); ++y) comms.push_back(commutator(g, x, y));
  Submonoid csub = generated_submonoid(g.monoid, comms);
  FiniteGroup cgroup = as_group(csub.monoid()).group.value();
  long long cexp = exponent(cgroup);
  for (long long k = 0; k < cexp; ++k) {
    bool special = special_wrt_table(g, commutator_power_op(g, k)).special;
    out.k_cases.emplace_back(k, special);
    if (!special) out.all_k_special = false;
  }
  out.complete_cover = out.group_is_2engel;
  return out;
}

SimpleTemplateEquivalence simple_t_engel_equivalence(const FiniteGroup& g) {
  SimpleTemplateEquivalence out;
  out.two_engel = is_2engel(g).is_2engel();
  InducedOperation op = induced_op(g, simple_template());
  out.subtraction_identity = true;
  for (int x = 0; x < g.size(); ++x)
    for (int y = 0; y < g.size(); ++y)
      if (op.at(op.at(x, g.inverse[y]), y) != x) {
        if (out.subtraction_identity) out.witness = {x, y};
        out.subtraction_identity = false;
      }
  return out;
}

std::vector<Finding> search_counterexamples(const std::vector<NamedGroup>& groups,
                                            const std::vector<SplittingTemplate>& templates) {
  std::vector<Finding> out;
  for (const auto& ng : groups)
    for (const auto& t : templates) {
      TemplateSpecialVerdict v = special_wrt(ng.group, t);
      out.push_back(Finding{ng.name, t, v.special, v.witness_y});
    }
  std::sort(out.begin(), out.end(), [](const Finding& a, const Finding& b) {
    if (a.group != b.group) return a.group < b.group;
    return a.tmpl < b.tmpl;
  });
  return out;
}

}  // namespace finalg
