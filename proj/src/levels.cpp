#include "upt/levels.hpp"

#include <algorithm>

namespace upt {

bool LevelNF::has_var(const std::string& v) const {
  for (const auto& [x, n] : atoms)
    if (x == v) return true;
  return false;
}

Nat LevelNF::shift_of(const std::string& v) const {
  for (const auto& [x, n] : atoms)
    if (x == v) return n;
  throw Error("shift_of: variable not present: " + v);
}

static void insert_atom(std::vector<std::pair<std::string, Nat>>& atoms,
                        const std::string& v, Nat n) {
  for (auto& [x, m] : atoms) {
    if (x == v) {
      m = std::max(m, n);
      return;
    }
  }
  auto it = atoms.begin();
  while (it != atoms.end() && level_var_less(it->first, v)) ++it;
  atoms.insert(it, {v, n});
}

LevelNF nf_of_var(const std::string& v) {
  LevelNF nf;
  nf.atoms.push_back({v, 0});
  return nf;
}

LevelNF nf_shift(const LevelNF& l, Nat n) {
  LevelNF out = l;
  out.k += n;
  for (auto& [x, m] : out.atoms) m += n;
  return out;
}

LevelNF nf_join(const LevelNF& a, const LevelNF& b) {
  LevelNF out = a;
  out.k = std::max(a.k, b.k);
  for (const auto& [x, n] : b.atoms) insert_atom(out.atoms, x, n);
  return out;
}

LevelNF nf_subst_var(const LevelNF& l, const std::string& v, const LevelNF& image) {
  if (!l.has_var(v)) return l;
  LevelNF out;
  out.k = l.k;
  Nat shift = 0;
  for (const auto& [x, n] : l.atoms) {
    if (x == v)
      shift = n;
    else
      insert_atom(out.atoms, x, n);
  }
  return nf_join(out, nf_shift(image, shift));
}

LevelNF level_nf(const TermPtr& l) {
  if (!l) throw NotALevel("null term is not a level");
  switch (l->tag) {
    case Tag::Var:
      if (!is_level_var(l->name)) throw NotALevel("not a level variable: " + l->name);
      return nf_of_var(l->name);
    case Tag::Const:
      if (l->name == kZ) return LevelNF{};
      throw NotALevel("not a level constant: " + l->name);
    case Tag::App:
      if (l->a->tag == Tag::Const && l->a->name == kS) return nf_shift(level_nf(l->b), 1);
      if (l->a->tag == Tag::App && l->a->a->tag == Tag::Const && l->a->a->name == kLub)
        return nf_join(level_nf(l->a->b), level_nf(l->b));
      throw NotALevel("not a level application");
    default:
      throw NotALevel("not a level expression");
  }
}

TermPtr nf_to_term(const LevelNF& nf) {
  TermPtr acc = ls(lz(), nf.k);
  for (const auto& [x, n] : nf.atoms) acc = llub(acc, ls(var(x), n));
  return acc;
}

TermPtr nf_to_term_minimal(const LevelNF& nf) {
  if (nf.atoms.empty()) return ls(lz(), nf.k);
  Nat max_shift = 0;
  for (const auto& [x, n] : nf.atoms) max_shift = std::max(max_shift, n);
  TermPtr acc;
  if (nf.k > max_shift) acc = ls(lz(), nf.k); // constant part is not dominated
  for (const auto& [x, n] : nf.atoms) {
    TermPtr a = ls(var(x), n);
    acc = acc ? llub(acc, a) : a;
  }
  return acc;
}

Nat interp_nf(const LevelNF& nf, const std::map<std::string, Nat>& sigma) {
  Nat v = nf.k;
  for (const auto& [x, n] : nf.atoms) {
    auto it = sigma.find(x);
    if (it == sigma.end()) throw UnboundVariable("interp: unbound level variable " + x);
    v = std::max(v, n + it->second);
  }
  return v;
}

Nat interp(const TermPtr& l, const std::map<std::string, Nat>& sigma) {
  if (!l) throw NotALevel("null term is not a level");
  switch (l->tag) {
    case Tag::Var: {
      if (!is_level_var(l->name)) throw NotALevel("not a level variable: " + l->name);
      auto it = sigma.find(l->name);
      if (it == sigma.end()) throw UnboundVariable("interp: unbound level variable " + l->name);
      return it->second;
    }
    case Tag::Const:
      if (l->name == kZ) return 0;
      throw NotALevel("not a level constant: " + l->name);
    case Tag::App:
      if (l->a->tag == Tag::Const && l->a->name == kS) return interp(l->b, sigma) + 1;
      if (l->a->tag == Tag::App && l->a->a->tag == Tag::Const && l->a->a->name == kLub)
        return std::max(interp(l->a->b, sigma), interp(l->b, sigma));
      throw NotALevel("not a level application");
    default:
      throw NotALevel("not a level expression");
  }
}

bool level_equiv(const TermPtr& l1, const TermPtr& l2) {
  return level_nf(l1) == level_nf(l2);
}

ConstraintNF constraint_nf(const ConstraintNF& c) {
  LevelNF l1 = c.lhs, l2 = c.rhs;
  // Shared variables: drop the occurrence with the strictly smaller shift.
  std::vector<std::pair<std::string, Nat>> a1, a2;
  for (const auto& [x, n1] : l1.atoms) {
    if (l2.has_var(x) && n1 < l2.shift_of(x)) continue;
    a1.push_back({x, n1});
  }
  for (const auto& [x, n2] : l2.atoms) {
    if (l1.has_var(x) && n2 < l1.shift_of(x)) continue;
    a2.push_back({x, n2});
  }
  l1.atoms = std::move(a1);
  l2.atoms = std::move(a2);
  // Subtract the minimum index.
  Nat m = std::min(l1.k, l2.k);
  for (const auto& [x, n] : l1.atoms) m = std::min(m, n);
  for (const auto& [x, n] : l2.atoms) m = std::min(m, n);
  l1.k -= m;
  l2.k -= m;
  for (auto& [x, n] : l1.atoms) n -= m;
  for (auto& [x, n] : l2.atoms) n -= m;
  return ConstraintNF{l1, l2};
}

ConstraintNF constraint_nf(const Constraint& c) {
  return constraint_nf(ConstraintNF{level_nf(c.lhs), level_nf(c.rhs)});
}

std::vector<std::string> nf_vars(const LevelNF& l) {
  std::vector<std::string> out;
  for (const auto& [x, n] : l.atoms) out.push_back(x);
  return out;
}

std::vector<std::string> constraint_vars(const ConstraintNF& c) {
  auto out = nf_vars(c.lhs);
  for (const auto& x : nf_vars(c.rhs))
    if (std::find(out.begin(), out.end(), x) == out.end()) out.push_back(x);
  return out;
}

std::string show_level_nf(const LevelNF& nf) {
  auto shifted = [](const std::string& base, Nat n) {
    std::string s = base;
    for (Nat i = 0; i < n; ++i) s = "s " + (s.find(' ') == std::string::npos ? s : "(" + s + ")");
    return s;
  };
  std::string out = shifted("z", nf.k);
  for (const auto& [x, n] : nf.atoms) out += " \\/ " + shifted(level_var_display(x), n);
  return out;
}

std::string show_constraint_nf(const ConstraintNF& c) {
  return show_level_nf(c.lhs) + " = " + show_level_nf(c.rhs);
}

} // namespace upt
