#pragma once

#include <optional>
#include <string>
#include <vector>

#include "latrep/lazy.hpp"

namespace latrep {

// Downward transposes between coverings and the chain-descent classifier for
// principal vs. secondary separators.

// y is a downward transpose of x iff x⁺ = x⁻ ∨ y⁺ and y⁻ = x⁻ ∧ y⁺.  Equal
// coverings satisfy the equations trivially; they are rejected here because
// chains require strictly decreasing upper elements.
template <class L, class E = typename L::element_type>
bool is_downward_transpose(const L& lat, const Covering<E>& x, const Covering<E>& y) {
  require_covering(lat, x);
  require_covering(lat, y);
  if (x.lower == y.lower && x.upper == y.upper) return false;
  return lat.join(x.lower, y.upper) == x.upper && lat.meet(x.lower, y.upper) == y.lower;
}

// One deterministic descent step: among the lower covers of x⁺ other than x⁻
// (restricted to the window when given), take the least in element order and
// pair it with its meet against x⁻.  Returns nothing exactly when x⁺ covers
// only x⁻, i.e. when the separator is principal with generator x⁺.
template <class L, class E = typename L::element_type>
std::optional<Covering<E>> down_step(const L& lat, const Covering<E>& c,
                                     const std::optional<std::pair<E, E>>& window = std::nullopt) {
  require_covering(lat, c);
  std::optional<E> pick;
  for (const E& y : lat.lower_covers(c.upper)) {
    if (y == c.lower) continue;
    if (window && !(lat.leq(window->first, y) && lat.leq(y, window->second))) continue;
    if (!pick || elem_less(y, *pick)) pick = y;
  }
  if (!pick) return std::nullopt;
  Covering<E> next{lat.meet(*pick, c.lower), *pick};
  require_covering(lat, next);
  if (!is_downward_transpose(lat, c, next)) throw Error("down_step produced a non-transpose");
  return next;
}

enum class VerdictStatus { Principal, BudgetExceeded };

template <class E>
struct ClassifyResult {
  VerdictStatus status = VerdictStatus::BudgetExceeded;
  std::optional<E> generator;  // upper element of the final covering
  int chain_length = 0;        // coverings in the chain, start included
  int budget = 0;
  std::vector<Covering<E>> chain;
  std::optional<bool> oracle_principal;  // symbolic kind, when the family is known
};

// Iterates down_step up to the budget.  Termination proves the separator
// principal; running out of budget is reported as such (the descent is a
// semi-decision), with the exact kind attached when the lattice carries a
// symbolic prime family.
template <class L, class E = typename L::element_type>
ClassifyResult<E> classify_prime(const L& lat, const Covering<E>& c, int budget,
                                 const std::optional<std::pair<E, E>>& window = std::nullopt) {
  if (budget < 1) throw Error("classify_prime requires budget >= 1");
  ClassifyResult<E> res;
  res.budget = budget;
  res.chain.push_back(c);
  Covering<E> cur = c;
  // the budget caps the chain length, start included
  for (;;) {
    auto next = down_step(lat, cur, window);
    if (!next) {
      res.status = VerdictStatus::Principal;
      res.generator = cur.upper;
      break;
    }
    if (static_cast<int>(res.chain.size()) >= budget) break;
    cur = *next;
    res.chain.push_back(cur);
  }
  res.chain_length = static_cast<int>(res.chain.size());
  if constexpr (SymbolicPrimes<L>) {
    res.oracle_principal = lat.prime_kind(lat.separator(c)).principal;
  }
  return res;
}

// Given transposes y, z of the same covering x, their meet covering
// w = (y⁻ ∧ z⁻, y⁺ ∧ z⁺) is a covering and a transpose of both (trivially so
// when it coincides with one of them).
template <class L, class E = typename L::element_type>
Covering<E> directedness_witness(const L& lat, const Covering<E>& x, const Covering<E>& y,
                                 const Covering<E>& z) {
  if (!is_downward_transpose(lat, x, y) || !is_downward_transpose(lat, x, z))
    throw HypothesisFailed("directedness_witness: inputs are not transposes of the base covering");
  Covering<E> w{lat.meet(y.lower, z.lower), lat.meet(y.upper, z.upper)};
  require_covering(lat, w);
  auto same = [](const Covering<E>& a, const Covering<E>& b) {
    return a.lower == b.lower && a.upper == b.upper;
  };
  if (!same(w, y) && !is_downward_transpose(lat, y, w))
    throw Error("directedness_witness: result is not a transpose of the first input");
  if (!same(w, z) && !is_downward_transpose(lat, z, w))
    throw Error("directedness_witness: result is not a transpose of the second input");
  return w;
}

}  // namespace latrep
