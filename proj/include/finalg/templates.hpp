#pragma once

// Natural splitting templates for groups as exponent words, their induced
// binary operations, specialness with respect to a template, and the
// 2-Engel detection and coefficient machinery.

#include <optional>
#include <string>
#include <vector>

#include "finalg/core.hpp"

namespace finalg {

struct BadSumsError : AlgebraError {
  long long k_sum, l_sum;
  BadSumsError(const std::string& msg, long long k, long long l)
      : AlgebraError(msg), k_sum(k), l_sum(l) {}
};

/// A word x^{k1} y^{l1} ... x^{km} y^{lm} in normal form: no (0,0) pair, no
/// internal zero exponent (only k1 and lm may vanish), and both exponent
/// sums equal to 1.
struct SplittingTemplate {
  std::vector<std::pair<int, int>> word;

  bool operator==(const SplittingTemplate& o) const = default;
  bool operator<(const SplittingTemplate& o) const { return word < o.word; }
};

/// Canonical free-product normal form; throws BadSumsError when the exponent
/// sums differ from (1, 1).
SplittingTemplate normalize(const std::vector<std::pair<int, int>>& raw);

/// `x^-1 y x^2` syntax; round-trips with parse_template.
std::string format_template(const SplittingTemplate& t);
SplittingTemplate parse_template(const std::string& text);

SplittingTemplate direct_template();                // x y
SplittingTemplate simple_template();                // x^-1 y x^2
SplittingTemplate commutator_squared_template();    // word inducing [x,y]^2 x y

/// All normal-form templates with at most `max_syllables` nonzero exponent
/// blocks and |exponent| <= max_exp, in deterministic order.
std::vector<SplittingTemplate> enumerate_templates(int max_syllables, int max_exp);

struct InducedOperation {
  FiniteGroup group;
  SplittingTemplate tmpl;
  std::vector<int> star;   // row-major

  int at(int x, int y) const { return star[static_cast<size_t>(x) * group.size() + y]; }
};

/// star[x][y] = x^{k1} y^{l1} ... evaluated in the group; unit laws are
/// asserted (they follow from the exponent sums).
InducedOperation induced_op(const FiniteGroup& g, const SplittingTemplate& t);

/// Operation table for (x, y) -> [x,y]^k x y.
std::vector<int> commutator_power_op(const FiniteGroup& g, long long k);

bool is_latin_square(const std::vector<int>& table, int n);

struct TemplateSpecialVerdict {
  bool special = false;
  std::vector<int> q;        // q(x,y) when special
  int witness_y = -1;        // y whose right star-translation is not bijective
  bool iss1 = false, iss2 = false, iss3 = false, iss4 = false;
};

/// Special with respect to the operation table: every right translation
/// x -> x*y must be a bijection; then q is its inverse and the subtraction
/// axioms are scanned.
TemplateSpecialVerdict special_wrt_table(const FiniteGroup& g, const std::vector<int>& star);
TemplateSpecialVerdict special_wrt(const FiniteGroup& g, const SplittingTemplate& t);

/// Elements z with z*y = x; the q(x,y) candidate set of the operation.
std::vector<int> q_candidates(const FiniteGroup& g, const std::vector<int>& star, int x, int y);

struct EngelWitness {
  int x = -1, y = -1;
  long long k = 0;

  bool present() const { return x >= 0; }
};

/// One equivalent 2-Engel condition: verdict plus a refuting pair when it
/// fails. The power conditions range k over 0..exponent-1, a complete case
/// split for all integers.
struct EngelCondition {
  bool holds = true;
  EngelWitness witness;
};

/// Verdicts for the equivalent 2-Engel conditions; they must agree.
struct EngelReport {
  EngelCondition nested_y;   // [[x,y],y] = 1
  EngelCondition nested_x;   // [[x,y],x] = 1
  EngelCondition conj;       // [conj(y,x), x] = 1
  EngelCondition inv_y;      // [x, y^-1] = [x,y]^-1
  EngelCondition inv_x;      // [x^-1, y] = [x,y]^-1
  EngelCondition pow_y;      // [x, y^k] = [x,y]^k for all k
  EngelCondition pow_x;      // [x^k, y] = [x,y]^k for all k

  bool is_2engel() const { return nested_y.holds; }
  const EngelWitness& witness() const { return nested_y.witness; }
  bool verdicts_agree() const {
    return nested_y.holds == nested_x.holds && nested_y.holds == conj.holds &&
           nested_y.holds == inv_y.holds && nested_y.holds == inv_x.holds &&
           nested_y.holds == pow_y.holds && nested_y.holds == pow_x.holds;
  }
};

EngelReport is_2engel(const FiniteGroup& g);

struct StarCoefficient {
  bool found = false;
  long long k = 0;                     // least non-negative uniform exponent
  std::pair<int, int> witness{-1, -1}; // pair emptying the candidate set
};

/// Least k in 0..exponent-1 with x*y = [x,y]^k x y for all pairs.
StarCoefficient engel_star_coefficient(const FiniteGroup& g, const SplittingTemplate& t);

struct TemplateSweep {
  bool group_is_2engel = false;
  std::vector<std::pair<SplittingTemplate, bool>> bounded;   // template -> special
  bool all_bounded_special = true;
  // Complete case split via [x,y]^k x y with k modulo the exponent of the
  // commutator-generated subgroup; only a full cover for 2-Engel groups.
  bool complete_cover = false;
  std::vector<std::pair<long long, bool>> k_cases;
  bool all_k_special = true;
};

TemplateSweep special_for_all_templates(const FiniteGroup& g, int max_syllables = 6,
                                        int max_exp = 3);

struct SimpleTemplateEquivalence {
  bool subtraction_identity = false;   // (x*y^-1)*y = x for * = x^-1 y x^2
  bool two_engel = false;
  std::pair<int, int> witness{-1, -1};

  bool equivalent() const { return subtraction_identity == two_engel; }
};

SimpleTemplateEquivalence simple_t_engel_equivalence(const FiniteGroup& g);

struct Finding {
  std::string group;
  SplittingTemplate tmpl;
  bool special = false;
  int witness_y = -1;
};

struct NamedGroup {
  std::string name;
  FiniteGroup group;
};

/// Streams (group, template, verdict) tuples over a catalogue, sorted by
/// their own keys so assembly order does not matter.
std::vector<Finding> search_counterexamples(const std::vector<NamedGroup>& groups,
                                            const std::vector<SplittingTemplate>& templates);

}  // namespace finalg
