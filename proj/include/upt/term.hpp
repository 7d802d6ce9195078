#ifndef UPT_TERM_HPP
#define UPT_TERM_HPP

// Lambda-Pi terms with an embedded universe-level sub-language.
// Terms are immutable after construction and shared freely.

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "upt/errors.hpp"

namespace upt {

using Nat = std::uint64_t;

// ---------------------------------------------------------------------------
// Variable namespaces.
//
// Level variables live in reserved lexical classes so that their kind is
// known before any typing happens:
//   ?<n>  metavariable (inserted in place of erased sort annotations)
//   i<n>  source-level variable (inputs, translated outputs)
//   ~<n>  fresh variable minted by the unifier (printed in the i<n> class;
//         indices are allocated above everything in the run, see unify)
// Everything else is an ordinary term variable.

enum class VarKind { TermVar, SourceLvl, MetaLvl, FreshLvl };

VarKind classify(const std::string& name);
bool is_level_var(const std::string& name);
// Numeric index of a level variable name.
Nat level_var_index(const std::string& name);

std::string source_var(Nat n); // "i<n>"
std::string meta_var(Nat n);   // "?<n>"
std::string fresh_var(Nat n);  // "~<n>"

// Total order on level variables: (namespace, index), Source < Meta < Fresh.
bool level_var_less(const std::string& a, const std::string& b);

// External spelling of a level variable (fresh variables print as i<n>).
std::string level_var_display(const std::string& name);

// Reserved constant names of the level-polymorphic target theory.
inline const std::string kLevel = "Level";
inline const std::string kZ = "z";
inline const std::string kS = "s";
inline const std::string kLub = "lub";
inline const std::string kU = "U";
inline const std::string kEl = "El";
inline const std::string kSmallU = "u";
inline const std::string kPi = "pi";

bool is_reserved_const(const std::string& name);

// ---------------------------------------------------------------------------
// Terms

enum class Tag { Var, Const, App, Lam, Pi, Type, Kind };

struct Term;
using TermPtr = std::shared_ptr<const Term>;

struct Term {
  Tag tag;
  std::string name; // Var/Const name; binder name for Lam/Pi
  TermPtr a;        // App: function; Lam: annotation; Pi: domain
  TermPtr b;        // App: argument; Lam: body;       Pi: codomain
};

TermPtr var(const std::string& name);
TermPtr cst(const std::string& name);
TermPtr app(TermPtr f, TermPtr x);
TermPtr app(TermPtr f, const std::vector<TermPtr>& xs);
TermPtr lam(const std::string& x, TermPtr annot, TermPtr body);
TermPtr pi(const std::string& x, TermPtr dom, TermPtr cod);
TermPtr arrow(TermPtr dom, TermPtr cod); // non-dependent product
TermPtr type_sort();
TermPtr kind_sort();

// Level expression builders.
TermPtr lz();
TermPtr ls(TermPtr l);
TermPtr ls(TermPtr l, Nat n);
TermPtr llub(TermPtr a, TermPtr b);

// Strict syntactic equality (names compared literally).
bool term_eq(const TermPtr& a, const TermPtr& b);

// Equality up to renaming of bound variables.
bool alpha_eq(const TermPtr& a, const TermPtr& b);

// A term of the level sub-language: level variable, z, s l, lub l l'.
bool is_level_expr(const TermPtr& t);

// Free variables (all kinds).
std::set<std::string> free_vars(const TermPtr& t);

// Free level variables in the fixed total order on level names.
std::vector<std::string> free_level_vars(const TermPtr& t);

// Capture-avoiding simultaneous substitution. Binders are renamed as needed.
// Substituting a non-level term for a level variable throws LevelKindViolation.
TermPtr subst(const TermPtr& m, const std::map<std::string, TermPtr>& s);
TermPtr subst(const TermPtr& m, const std::string& x, const TermPtr& n);

// Application spine: f a1 ... an  ->  (f, [a1, ..., an]).
std::pair<TermPtr, std::vector<TermPtr>> spine(TermPtr t);

// ---------------------------------------------------------------------------
// Signatures and contexts

struct SignatureEntry {
  std::string name;
  TermPtr type;
  TermPtr body; // null for declarations
  bool is_def() const { return body != nullptr; }
};

// Ordered sequence of declarations/definitions; later entries may only
// reference earlier names.
class Signature {
public:
  Signature() = default;

  void add_decl(const std::string& name, TermPtr type);
  void add_def(const std::string& name, TermPtr type, TermPtr body);
  void add(const SignatureEntry& e);

  const SignatureEntry* find(const std::string& name) const;
  const std::vector<SignatureEntry>& entries() const { return entries_; }
  std::size_t size() const { return entries_.size(); }
  bool empty() const { return entries_.empty(); }

  // View of the first n entries (used while checking entry n).
  Signature prefix(std::size_t n) const;

private:
  std::vector<SignatureEntry> entries_;
};

struct Context {
  std::vector<std::pair<std::string, TermPtr>> vars;

  const TermPtr* find(const std::string& name) const {
    for (auto it = vars.rbegin(); it != vars.rend(); ++it)
      if (it->first == name) return &it->second;
    return nullptr;
  }
  void push(const std::string& name, TermPtr type) { vars.emplace_back(name, std::move(type)); }
  void pop() { vars.pop_back(); }
};

} // namespace upt

#endif
