#ifndef UPT_REWRITING_HPP
#define UPT_REWRITING_HPP

// Reduction (beta, definition unfolding, theory rewrite rules), conversion
// modulo level equations, and the plain type checker used to validate inputs
// and re-check translated outputs.

#include <optional>

#include "upt/theory.hpp"

namespace upt {

inline constexpr Nat kDefaultFuel = 1'000'000;

// Head-step budget for one judgment; exhausting it throws FuelExhausted.
struct Fuel {
  Nat remaining = kDefaultFuel;
  void tick() {
    if (remaining == 0) throw FuelExhausted("head-step budget exhausted");
    --remaining;
  }
};

// Weak head normal form under beta, delta (definitions of theory and local
// signature) and the theory's rewrite rules; leftmost-outermost.
TermPtr whnf(const Theory& th, const Signature& sig, TermPtr t, Fuel& fuel);
TermPtr whnf(const Theory& th, const Signature& sig, TermPtr t,
             Nat fuel = kDefaultFuel);

// One head step if the term is not yet in weak head normal form.
std::optional<TermPtr> whnf_step(const Theory& th, const Signature& sig,
                                 const TermPtr& t, Fuel& fuel);

// Conversion: reduce both sides, compare structurally; level subterms are
// compared by normal-form equality when the theory's level equations are on.
bool conv(const Theory& th, const Signature& sig, const TermPtr& m, const TermPtr& n,
          Fuel& fuel);
bool conv(const Theory& th, const Signature& sig, const TermPtr& m, const TermPtr& n,
          Nat fuel = kDefaultFuel);

// Plain bidirectional-free checker (infer/check).
TermPtr infer(const Theory& th, const Signature& sig, Context& ctx, const TermPtr& t,
              Fuel& fuel);
void check(const Theory& th, const Signature& sig, Context& ctx, const TermPtr& t,
           const TermPtr& type, Fuel& fuel);

// Infers t and reduces the result to a sort; throws TypeError otherwise.
TermPtr infer_sort(const Theory& th, const Signature& sig, Context& ctx,
                   const TermPtr& t, Fuel& fuel);

// Checks every entry in order (declaration types are sorted; definition
// bodies check against their declared types). Throws TypeError/FuelExhausted.
void typecheck_signature(const Theory& th, const Signature& sig,
                         Nat fuel_per_entry = kDefaultFuel);

} // namespace upt

#endif
