#include "upt/term.hpp"

#include <algorithm>

namespace upt {

// ---------------------------------------------------------------------------
// Names

static bool all_digits(const std::string& s, std::size_t from) {
  if (from >= s.size()) return false;
  for (std::size_t i = from; i < s.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  return true;
}

VarKind classify(const std::string& name) {
  if (!name.empty() && name[0] == '?' && all_digits(name, 1)) return VarKind::MetaLvl;
  if (!name.empty() && name[0] == '~' && all_digits(name, 1)) return VarKind::FreshLvl;
  if (!name.empty() && name[0] == 'i' && all_digits(name, 1)) return VarKind::SourceLvl;
  return VarKind::TermVar;
}

bool is_level_var(const std::string& name) { return classify(name) != VarKind::TermVar; }

Nat level_var_index(const std::string& name) {
  return std::stoull(name.substr(1));
}

std::string source_var(Nat n) { return "i" + std::to_string(n); }
std::string meta_var(Nat n) { return "?" + std::to_string(n); }
std::string fresh_var(Nat n) { return "~" + std::to_string(n); }

static int ns_rank(VarKind k) {
  switch (k) {
    case VarKind::SourceLvl: return 0;
    case VarKind::MetaLvl: return 1;
    case VarKind::FreshLvl: return 2;
    default: return 3;
  }
}

bool level_var_less(const std::string& a, const std::string& b) {
  int ra = ns_rank(classify(a)), rb = ns_rank(classify(b));
  if (ra != rb) return ra < rb;
  if (ra == 3) return a < b;
  return level_var_index(a) < level_var_index(b);
}

std::string level_var_display(const std::string& name) {
  if (classify(name) == VarKind::FreshLvl) return "i" + name.substr(1);
  return name;
}

bool is_reserved_const(const std::string& name) {
  return name == kLevel || name == kZ || name == kS || name == kLub ||
         name == kU || name == kEl || name == kSmallU || name == kPi;
}

// ---------------------------------------------------------------------------
// Builders

static TermPtr mk(Tag tag, std::string name, TermPtr a, TermPtr b) {
  auto t = std::make_shared<Term>();
  t->tag = tag;
  t->name = std::move(name);
  t->a = std::move(a);
  t->b = std::move(b);
  return t;
}

TermPtr var(const std::string& name) { return mk(Tag::Var, name, nullptr, nullptr); }
TermPtr cst(const std::string& name) { return mk(Tag::Const, name, nullptr, nullptr); }
TermPtr app(TermPtr f, TermPtr x) { return mk(Tag::App, "", std::move(f), std::move(x)); }

TermPtr app(TermPtr f, const std::vector<TermPtr>& xs) {
  for (const auto& x : xs) f = app(f, x);
  return f;
}

TermPtr lam(const std::string& x, TermPtr annot, TermPtr body) {
  return mk(Tag::Lam, x, std::move(annot), std::move(body));
}
TermPtr pi(const std::string& x, TermPtr dom, TermPtr cod) {
  return mk(Tag::Pi, x, std::move(dom), std::move(cod));
}
TermPtr arrow(TermPtr dom, TermPtr cod) { return pi("_", std::move(dom), std::move(cod)); }

TermPtr type_sort() {
  static TermPtr t = mk(Tag::Type, "", nullptr, nullptr);
  return t;
}
TermPtr kind_sort() {
  static TermPtr t = mk(Tag::Kind, "", nullptr, nullptr);
  return t;
}

TermPtr lz() {
  static TermPtr t = cst(kZ);
  return t;
}
TermPtr ls(TermPtr l) { return app(cst(kS), std::move(l)); }
TermPtr ls(TermPtr l, Nat n) {
  for (Nat i = 0; i < n; ++i) l = ls(l);
  return l;
}
TermPtr llub(TermPtr a, TermPtr b) { return app(app(cst(kLub), std::move(a)), std::move(b)); }

// ---------------------------------------------------------------------------
// Equality

bool term_eq(const TermPtr& a, const TermPtr& b) {
  if (a == b) return true;
  if (!a || !b) return false;
  if (a->tag != b->tag) return false;
  switch (a->tag) {
    case Tag::Var:
    case Tag::Const:
      return a->name == b->name;
    case Tag::Type:
    case Tag::Kind:
      return true;
    case Tag::App:
      return term_eq(a->a, b->a) && term_eq(a->b, b->b);
    case Tag::Lam:
    case Tag::Pi:
      return a->name == b->name && term_eq(a->a, b->a) && term_eq(a->b, b->b);
  }
  return false;
}

namespace {

struct AlphaEnv {
  // parallel binder stacks; a bound name maps to its depth of introduction
  std::vector<std::string> left, right;

  std::optional<std::size_t> depth_of(const std::vector<std::string>& side,
                                      const std::string& name) const {
    for (std::size_t i = side.size(); i-- > 0;)
      if (side[i] == name) return i;
    return std::nullopt;
  }
};

bool alpha_rec(const TermPtr& a, const TermPtr& b, AlphaEnv& env) {
  if (a->tag != b->tag) return false;
  switch (a->tag) {
    case Tag::Var: {
      auto da = env.depth_of(env.left, a->name);
      auto db = env.depth_of(env.right, b->name);
      if (da.has_value() != db.has_value()) return false;
      if (da) return *da == *db;
      return a->name == b->name;
    }
    case Tag::Const:
      return a->name == b->name;
    case Tag::Type:
    case Tag::Kind:
      return true;
    case Tag::App:
      return alpha_rec(a->a, b->a, env) && alpha_rec(a->b, b->b, env);
    case Tag::Lam:
    case Tag::Pi: {
      if (!alpha_rec(a->a, b->a, env)) return false;
      env.left.push_back(a->name);
      env.right.push_back(b->name);
      bool ok = alpha_rec(a->b, b->b, env);
      env.left.pop_back();
      env.right.pop_back();
      return ok;
    }
  }
  return false;
}

} // namespace

bool alpha_eq(const TermPtr& a, const TermPtr& b) {
  if (!a || !b) return a == b;
  AlphaEnv env;
  return alpha_rec(a, b, env);
}

// ---------------------------------------------------------------------------
// Level expressions

bool is_level_expr(const TermPtr& t) {
  if (!t) return false;
  switch (t->tag) {
    case Tag::Var:
      return is_level_var(t->name);
    case Tag::Const:
      return t->name == kZ;
    case Tag::App: {
      // s l
      if (t->a->tag == Tag::Const && t->a->name == kS) return is_level_expr(t->b);
      // lub l l'
      if (t->a->tag == Tag::App && t->a->a->tag == Tag::Const && t->a->a->name == kLub)
        return is_level_expr(t->a->b) && is_level_expr(t->b);
      return false;
    }
    default:
      return false;
  }
}

// ---------------------------------------------------------------------------
// Free variables

static void fv_rec(const TermPtr& t, std::vector<std::string>& bound,
                   std::set<std::string>& out) {
  switch (t->tag) {
    case Tag::Var:
      if (std::find(bound.rbegin(), bound.rend(), t->name) == bound.rend())
        out.insert(t->name);
      return;
    case Tag::Const:
    case Tag::Type:
    case Tag::Kind:
      return;
    case Tag::App:
      fv_rec(t->a, bound, out);
      fv_rec(t->b, bound, out);
      return;
    case Tag::Lam:
    case Tag::Pi:
      fv_rec(t->a, bound, out);
      bound.push_back(t->name);
      fv_rec(t->b, bound, out);
      bound.pop_back();
      return;
  }
}

std::set<std::string> free_vars(const TermPtr& t) {
  std::set<std::string> out;
  std::vector<std::string> bound;
  fv_rec(t, bound, out);
  return out;
}

// Pre-order collection so callers can also recover first-occurrence order.
static void flv_rec(const TermPtr& t, std::vector<std::string>& bound,
                    std::vector<std::string>& out) {
  switch (t->tag) {
    case Tag::Var:
      if (is_level_var(t->name) &&
          std::find(bound.rbegin(), bound.rend(), t->name) == bound.rend() &&
          std::find(out.begin(), out.end(), t->name) == out.end())
        out.push_back(t->name);
      return;
    case Tag::Const:
    case Tag::Type:
    case Tag::Kind:
      return;
    case Tag::App:
      flv_rec(t->a, bound, out);
      flv_rec(t->b, bound, out);
      return;
    case Tag::Lam:
    case Tag::Pi:
      flv_rec(t->a, bound, out);
      bound.push_back(t->name);
      flv_rec(t->b, bound, out);
      bound.pop_back();
      return;
  }
}

std::vector<std::string> free_level_vars_in_occurrence_order(const TermPtr& t);

std::vector<std::string> free_level_vars_in_occurrence_order(const TermPtr& t) {
  std::vector<std::string> out;
  std::vector<std::string> bound;
  flv_rec(t, bound, out);
  return out;
}

std::vector<std::string> free_level_vars(const TermPtr& t) {
  auto out = free_level_vars_in_occurrence_order(t);
  std::sort(out.begin(), out.end(), level_var_less);
  return out;
}

// ---------------------------------------------------------------------------
// Substitution

namespace {

// Pick a name not in `avoid`, staying in the variable's namespace so that
// renaming never changes a name's classification.
std::string rename_away(const std::string& x, const std::set<std::string>& avoid) {
  VarKind k = classify(x);
  if (k == VarKind::TermVar) {
    std::string cand = x;
    do {
      cand += "'";
    } while (avoid.count(cand));
    return cand;
  }
  Nat n = level_var_index(x) + 1;
  auto mint = [&](Nat m) {
    switch (k) {
      case VarKind::SourceLvl: return source_var(m);
      case VarKind::MetaLvl: return meta_var(m);
      default: return fresh_var(m);
    }
  };
  std::string cand = mint(n);
  while (avoid.count(cand)) cand = mint(++n);
  return cand;
}

TermPtr subst_rec(const TermPtr& m, const std::map<std::string, TermPtr>& s,
                  const std::set<std::string>& img_fv) {
  switch (m->tag) {
    case Tag::Var: {
      auto it = s.find(m->name);
      return it == s.end() ? m : it->second;
    }
    case Tag::Const:
    case Tag::Type:
    case Tag::Kind:
      return m;
    case Tag::App: {
      TermPtr f = subst_rec(m->a, s, img_fv);
      TermPtr x = subst_rec(m->b, s, img_fv);
      if (f == m->a && x == m->b) return m;
      return app(f, x);
    }
    case Tag::Lam:
    case Tag::Pi: {
      TermPtr annot = subst_rec(m->a, s, img_fv);
      std::map<std::string, TermPtr> s2 = s;
      s2.erase(m->name); // shadowing
      std::string binder = m->name;
      TermPtr body = m->b;
      if (!s2.empty() && img_fv.count(binder)) {
        // binder would capture a substituted image; rename it first
        std::set<std::string> avoid = img_fv;
        for (const auto& v : free_vars(body)) avoid.insert(v);
        for (const auto& kv : s2) avoid.insert(kv.first);
        std::string fresh = rename_away(binder, avoid);
        body = subst(body, binder, var(fresh));
        binder = fresh;
      }
      TermPtr nb = s2.empty() ? body : subst_rec(body, s2, img_fv);
      if (binder == m->name && annot == m->a && nb == m->b) return m;
      return m->tag == Tag::Lam ? lam(binder, annot, nb) : pi(binder, annot, nb);
    }
  }
  return m;
}

} // namespace

TermPtr subst(const TermPtr& m, const std::map<std::string, TermPtr>& s) {
  if (s.empty()) return m;
  std::set<std::string> img_fv;
  for (const auto& [x, n] : s) {
    if (is_level_var(x) && !is_level_expr(n))
      throw LevelKindViolation("level variable " + x + " substituted by a non-level term");
    for (const auto& v : free_vars(n)) img_fv.insert(v);
  }
  return subst_rec(m, s, img_fv);
}

TermPtr subst(const TermPtr& m, const std::string& x, const TermPtr& n) {
  return subst(m, std::map<std::string, TermPtr>{{x, n}});
}

std::pair<TermPtr, std::vector<TermPtr>> spine(TermPtr t) {
  std::vector<TermPtr> args;
  while (t->tag == Tag::App) {
    args.push_back(t->b);
    t = t->a;
  }
  std::reverse(args.begin(), args.end());
  return {t, args};
}

// ---------------------------------------------------------------------------
// Signature

void Signature::add_decl(const std::string& name, TermPtr type) {
  add(SignatureEntry{name, std::move(type), nullptr});
}
void Signature::add_def(const std::string& name, TermPtr type, TermPtr body) {
  add(SignatureEntry{name, std::move(type), std::move(body)});
}
void Signature::add(const SignatureEntry& e) {
  if (find(e.name))
    throw Error("duplicate signature entry: " + e.name);
  entries_.push_back(e);
}

const SignatureEntry* Signature::find(const std::string& name) const {
  for (const auto& e : entries_)
    if (e.name == name) return &e;
  return nullptr;
}

Signature Signature::prefix(std::size_t n) const {
  Signature s;
  for (std::size_t i = 0; i < n && i < entries_.size(); ++i) s.entries_.push_back(entries_[i]);
  return s;
}

} // namespace upt
