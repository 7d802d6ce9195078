#include "upt/theory.hpp"

#include <algorithm>
#include <charconv>

namespace upt {

// ---------------------------------------------------------------------------
// PtsSpec

PtsSpec PtsSpec::naturals() {
  PtsSpec s;
  s.kind = Kind::Naturals;
  return s;
}

static bool valid_sort_name(const std::string& s) {
  if (s.empty()) return false;
  return std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isalnum(c); });
}

void PtsSpec::validate() const {
  if (kind == Kind::Naturals) return;
  auto known = [&](const std::string& s) {
    return std::find(sorts.begin(), sorts.end(), s) != sorts.end();
  };
  for (const auto& s : sorts)
    if (!valid_sort_name(s)) throw IllFormedSpec("invalid sort name: '" + s + "'");
  for (const auto& [s1, s2] : axioms)
    if (!known(s1) || !known(s2)) throw IllFormedSpec("axiom references unknown sort");
  for (const auto& [lhs, s3] : rules)
    if (!known(lhs.first) || !known(lhs.second) || !known(s3))
      throw IllFormedSpec("rule references unknown sort");
  // Functionality of A and R is guaranteed by the map representation; the
  // frontend parser rejects duplicate keys explicitly.
}

std::string pts_univ(const std::string& s) { return "U_" + s; }
std::string pts_el(const std::string& s) { return "El_" + s; }
std::string pts_code(const std::string& s) { return "u_" + s; }
std::string pts_pi(const std::string& s1, const std::string& s2) {
  return "pi_" + s1 + "_" + s2;
}

// ---------------------------------------------------------------------------
// Entry/rule builders shared by the finite and schematic encodings

namespace {

SignatureEntry decl(const std::string& n, TermPtr ty) { return {n, std::move(ty), nullptr}; }

// pi_{s1,s2} : (A : U_{s1}) -> (El_{s1} A -> U_{s2}) -> U_{s3}
TermPtr pts_pi_type(const std::string& s1, const std::string& s2, const std::string& s3) {
  return pi("A", cst(pts_univ(s1)),
            arrow(arrow(app(cst(pts_el(s1)), var("A")), cst(pts_univ(s2))),
                  cst(pts_univ(s3))));
}

// El_{s2} u_{s1} -> U_{s1}
RewriteRule axiom_rule(const std::string& s1, const std::string& s2) {
  return {pts_el(s2), {cst(pts_code(s1))}, cst(pts_univ(s1))};
}

// El_{s3} (pi_{s1,s2} A B) -> (x : El_{s1} A) -> El_{s2} (B x)
RewriteRule product_rule(const std::string& s1, const std::string& s2, const std::string& s3) {
  TermPtr lhs_arg = app(app(cst(pts_pi(s1, s2)), var("A")), var("B"));
  TermPtr rhs = pi("x", app(cst(pts_el(s1)), var("A")),
                   app(cst(pts_el(s2)), app(var("B"), var("x"))));
  return {pts_el(s3), {lhs_arg}, rhs};
}

std::optional<Nat> parse_nat(const std::string& s) {
  if (s.empty()) return std::nullopt;
  Nat v = 0;
  auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || p != s.data() + s.size()) return std::nullopt;
  return v;
}

} // namespace

// ---------------------------------------------------------------------------
// Theory

const SignatureEntry* Theory::find_const(const std::string& name) const {
  if (const auto* e = globals.find(name)) return e;
  if (!schema_) return nullptr;
  std::lock_guard<std::mutex> lock(memo_mu_);
  auto it = const_memo_.find(name);
  if (it != const_memo_.end()) return &it->second;
  auto synth = synthesize_const(name);
  if (!synth) return nullptr;
  return &const_memo_.emplace(name, std::move(*synth)).first->second;
}

std::vector<RewriteRule> Theory::rules_for_head(const std::string& name) const {
  std::vector<RewriteRule> out;
  for (const auto& r : rules)
    if (r.head == name) out.push_back(r);
  if (schema_) {
    std::lock_guard<std::mutex> lock(memo_mu_);
    auto it = rule_memo_.find(name);
    if (it == rule_memo_.end())
      it = rule_memo_.emplace(name, synthesize_rules(name)).first;
    out.insert(out.end(), it->second.begin(), it->second.end());
  }
  return out;
}

// Schematic natural-number encoding: U_n, El_n, u_n : U_{n+1},
// pi_a_b : ... -> U_{max(a,b)}, with matching rules.
std::optional<SignatureEntry> Theory::synthesize_const(const std::string& name) const {
  auto after = [&](const std::string& prefix) -> std::optional<Nat> {
    if (name.rfind(prefix, 0) != 0) return std::nullopt;
    return parse_nat(name.substr(prefix.size()));
  };
  if (auto n = after("U_")) return decl(name, type_sort());
  if (auto n = after("El_"))
    return decl(name, arrow(cst(pts_univ(std::to_string(*n))), type_sort()));
  if (auto n = after("u_"))
    return decl(name, cst(pts_univ(std::to_string(*n + 1))));
  if (name.rfind("pi_", 0) == 0) {
    auto rest = name.substr(3);
    auto us = rest.find('_');
    if (us == std::string::npos) return std::nullopt;
    auto a = parse_nat(rest.substr(0, us));
    auto b = parse_nat(rest.substr(us + 1));
    if (!a || !b) return std::nullopt;
    std::string s1 = std::to_string(*a), s2 = std::to_string(*b);
    std::string s3 = std::to_string(std::max(*a, *b));
    return decl(name, pts_pi_type(s1, s2, s3));
  }
  return std::nullopt;
}

std::vector<RewriteRule> Theory::synthesize_rules(const std::string& name) const {
  std::vector<RewriteRule> out;
  if (name.rfind("El_", 0) != 0) return out;
  auto k = parse_nat(name.substr(3));
  if (!k) return out;
  std::string sk = std::to_string(*k);
  if (*k >= 1) out.push_back(axiom_rule(std::to_string(*k - 1), sk));
  // all (a,b) with max(a,b) = k
  for (Nat b = 0; b <= *k; ++b) out.push_back(product_rule(sk, std::to_string(b), sk));
  for (Nat a = 0; a < *k; ++a) out.push_back(product_rule(std::to_string(a), sk, sk));
  return out;
}

void Theory::validate() const {
  for (const auto& r : rules) {
    if (!find_const(r.head)) throw Error("rewrite rule head not declared: " + r.head);
    std::set<std::string> lhs_vars;
    for (const auto& p : r.lhs_args) {
      auto [h, args] = spine(p);
      (void)args;
      for (const auto& v : free_vars(p)) lhs_vars.insert(v);
      // constants inside patterns must be declared
      std::vector<TermPtr> stack{p};
      while (!stack.empty()) {
        TermPtr t = stack.back();
        stack.pop_back();
        if (t->tag == Tag::Const && !find_const(t->name))
          throw Error("rewrite rule pattern constant not declared: " + t->name);
        if (t->tag == Tag::App) {
          stack.push_back(t->a);
          stack.push_back(t->b);
        }
      }
    }
    for (const auto& v : free_vars(r.rhs))
      if (!lhs_vars.count(v) && !is_level_var(v))
        throw Error("rewrite rule rhs variable not bound by lhs: " + v);
  }
}

// ---------------------------------------------------------------------------
// Encodings

Theory build_pts_theory(const PtsSpec& spec) {
  spec.validate();
  Theory th;
  if (spec.kind == PtsSpec::Kind::Naturals) {
    th.set_schema(spec);
    return th;
  }
  for (const auto& s : spec.sorts) {
    th.globals.add_decl(pts_univ(s), type_sort());
    th.globals.add_decl(pts_el(s), arrow(cst(pts_univ(s)), type_sort()));
  }
  for (const auto& [s1, s2] : spec.axioms) {
    th.globals.add_decl(pts_code(s1), cst(pts_univ(s2)));
    th.rules.push_back(axiom_rule(s1, s2));
  }
  for (const auto& [lhs, s3] : spec.rules) {
    th.globals.add_decl(pts_pi(lhs.first, lhs.second), pts_pi_type(lhs.first, lhs.second, s3));
    th.rules.push_back(product_rule(lhs.first, lhs.second, s3));
  }
  th.validate();
  return th;
}

Theory upp_theory() {
  Theory th;
  th.level_equations = true;
  TermPtr Level = cst(kLevel);
  th.globals.add_decl(kLevel, type_sort());
  th.globals.add_decl(kZ, Level);
  th.globals.add_decl(kS, arrow(Level, Level));
  th.globals.add_decl(kLub, arrow(Level, arrow(Level, Level)));
  // U : Level -> Type
  th.globals.add_decl(kU, arrow(Level, type_sort()));
  // El : (i : Level) -> U i -> Type
  th.globals.add_decl(kEl, pi("i0", Level, arrow(app(cst(kU), var("i0")), type_sort())));
  // u : (i : Level) -> U (s i)
  th.globals.add_decl(kSmallU, pi("i0", Level, app(cst(kU), ls(var("i0")))));
  // pi : (iA iB : Level) -> (A : U iA) -> (El iA A -> U iB) -> U (iA \/ iB)
  th.globals.add_decl(
      kPi,
      pi("i0", Level,
         pi("i1", Level,
            pi("A", app(cst(kU), var("i0")),
               arrow(arrow(app(app(cst(kEl), var("i0")), var("A")), app(cst(kU), var("i1"))),
                     app(cst(kU), llub(var("i0"), var("i1"))))))));
  // El i' (u i) -> U i
  th.rules.push_back(RewriteRule{
      kEl, {var("i'"), app(cst(kSmallU), var("i"))}, app(cst(kU), var("i"))});
  // El i' (pi iA iB A B) -> (x : El iA A) -> El iB (B x)
  th.rules.push_back(RewriteRule{
      kEl,
      {var("i'"), app(cst(kPi), {var("iA"), var("iB"), var("A"), var("B")})},
      pi("x", app(app(cst(kEl), var("iA")), var("A")),
         app(app(cst(kEl), var("iB")), app(var("B"), var("x"))))});
  th.validate();
  return th;
}

PtsSpec impredicative_spec() {
  PtsSpec s;
  s.sorts = {"star", "box"};
  s.axioms = {{"star", "box"}};
  s.rules = {{{"star", "star"}, "star"},
             {{"box", "star"}, "star"},
             {{"box", "box"}, "box"}};
  return s;
}

PtsSpec predicative_spec() { return PtsSpec::naturals(); }

} // namespace upt
