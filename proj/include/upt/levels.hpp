#ifndef UPT_LEVELS_HPP
#define UPT_LEVELS_HPP

// Universe-level algebra: semantic interpretation, level normal forms
// s^k z \/ (\/ s^{n_i} i) with n_i <= k, and constraint normal forms.

#include <map>
#include <string>
#include <vector>

#include "upt/term.hpp"

namespace upt {

struct LevelNF {
  Nat k = 0;                                      // constant part, s^k z
  std::vector<std::pair<std::string, Nat>> atoms; // var -> shift, in level-var order

  bool operator==(const LevelNF& o) const { return k == o.k && atoms == o.atoms; }
  bool has_var(const std::string& v) const;
  Nat shift_of(const std::string& v) const; // precondition: has_var(v)
};

// An equation l = l' between levels; satisfaction of a substitution theta
// means (l theta) and (l' theta) are equivalent in the level algebra.
struct Constraint {
  TermPtr lhs, rhs;
};

struct ConstraintNF {
  LevelNF lhs, rhs;
  bool operator==(const ConstraintNF& o) const { return lhs == o.lhs && rhs == o.rhs; }
};

// Unique normal form of a level expression. Throws NotALevel.
LevelNF level_nf(const TermPtr& l);

// Canonical rendering: s^k z \/ s^{n1} i1 \/ ..., left-associated, ascending
// variable order; the constant part is always present.
TermPtr nf_to_term(const LevelNF& nf);

// Equivalent rendering that omits redundant parts (z \/ i prints as i,
// s z \/ s i as s i). Used when substituting solved levels into terms.
TermPtr nf_to_term_minimal(const LevelNF& nf);

// Natural-number value of a level under an assignment of its variables.
// Throws UnboundVariable if sigma misses a free variable, NotALevel otherwise.
Nat interp(const TermPtr& l, const std::map<std::string, Nat>& sigma);
Nat interp_nf(const LevelNF& nf, const std::map<std::string, Nat>& sigma);

// l1 ~ l2 in the level algebra, decided by normal-form equality.
bool level_equiv(const TermPtr& l1, const TermPtr& l2);

// Normal form of a constraint: both sides in NF, shared variables keep only
// equal shifts (the strictly smaller occurrence is dropped), and the minimum
// of {k1,k2} and all shifts is subtracted out. Satisfaction-preserving.
ConstraintNF constraint_nf(const Constraint& c);
ConstraintNF constraint_nf(const ConstraintNF& c);

// NF combinators.
LevelNF nf_of_var(const std::string& v);
LevelNF nf_shift(const LevelNF& l, Nat n);            // s^n l
LevelNF nf_join(const LevelNF& a, const LevelNF& b);  // l \/ l'
// Substitute image for every occurrence of v (s^n v contributes s^n image).
LevelNF nf_subst_var(const LevelNF& l, const std::string& v, const LevelNF& image);

std::vector<std::string> nf_vars(const LevelNF& l);
std::vector<std::string> constraint_vars(const ConstraintNF& c);

std::string show_level_nf(const LevelNF& nf);
std::string show_constraint_nf(const ConstraintNF& c);

} // namespace upt

#endif
