#ifndef UPT_THEORY_HPP
#define UPT_THEORY_HPP

// Theories: a global signature, rewrite rules, and optionally the level
// equational theory. Includes the generic PTS encoding and the fixed
// level-polymorphic target theory.

#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "upt/term.hpp"

namespace upt {

// PTS specification (S, A, R) with functional A and R. The sort set is
// either an explicit finite set or the schematic natural-number family
// (sorts n, axioms n : n+1, products at max).
struct PtsSpec {
  enum class Kind { Finite, Naturals };
  Kind kind = Kind::Finite;

  std::vector<std::string> sorts;
  std::map<std::string, std::string> axioms;                         // s1 -> s2
  std::map<std::pair<std::string, std::string>, std::string> rules;  // (s1,s2) -> s3

  static PtsSpec naturals();
  void validate() const; // throws IllFormedSpec
};

// Mangled constant names for a PTS encoding.
std::string pts_univ(const std::string& s);                          // U_<s>
std::string pts_el(const std::string& s);                            // El_<s>
std::string pts_code(const std::string& s);                          // u_<s>
std::string pts_pi(const std::string& s1, const std::string& s2);    // pi_<s1>_<s2>

// A rewrite rule c l1 ... lk -> r; lhs argument patterns are built from
// constants, variables and applications, and every free variable of the
// right-hand side occurs in the patterns.
struct RewriteRule {
  std::string head;
  std::vector<TermPtr> lhs_args;
  TermPtr rhs;
};

class Theory {
public:
  Signature globals;
  std::vector<RewriteRule> rules;
  bool level_equations = false;

  // Constant lookup; for the schematic natural-number encoding, constants
  // and their rules are synthesized on demand and memoized.
  const SignatureEntry* find_const(const std::string& name) const;
  std::vector<RewriteRule> rules_for_head(const std::string& name) const;

  void set_schema(PtsSpec spec) { schema_ = std::move(spec); }
  const std::optional<PtsSpec>& schema() const { return schema_; }

  // Checks that rule constants are declared (throws Error).
  void validate() const;

private:
  std::optional<PtsSpec> schema_;
  mutable std::mutex memo_mu_;
  mutable std::map<std::string, SignatureEntry> const_memo_;
  mutable std::map<std::string, std::vector<RewriteRule>> rule_memo_;

  std::optional<SignatureEntry> synthesize_const(const std::string& name) const;
  std::vector<RewriteRule> synthesize_rules(const std::string& name) const;
};

// The encoding of the PTS given by `spec`: per sort U_s and El_s, per axiom
// u_{s1} : U_{s2} with El_{s2} u_{s1} -> U_{s1}, per product rule
// pi_{s1,s2} : (A : U_{s1}) -> (El_{s1} A -> U_{s2}) -> U_{s3} with
// El_{s3} (pi_{s1,s2} A B) -> (x : El_{s1} A) -> El_{s2} (B x).
Theory build_pts_theory(const PtsSpec& spec);

// The fixed level-polymorphic predicative theory: Level/z/s/lub, U/El/u/pi,
// the two El rewrite rules, level equations active.
Theory upp_theory();

// Built-in specs: the two-sort impredicative system and the predicative
// natural-number hierarchy.
PtsSpec impredicative_spec(); // S={star,box}, A={(star,box)}, R={(s,s,s),(b,s,s),(b,b,b)}
PtsSpec predicative_spec();   // schematic naturals

} // namespace upt

#endif
