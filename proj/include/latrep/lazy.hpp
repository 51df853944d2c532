#pragma once

#include <algorithm>
#include <optional>
#include <set>
#include <string>
#include <variant>
#include <vector>

#include "latrep/errors.hpp"
#include "latrep/filters.hpp"

namespace latrep {

using Coord = long long;
using Tuple = std::vector<Coord>;

inline std::string tuple_to_string(const Tuple& t, char open = '(', char close = ')') {
  std::string s(1, open);
  for (std::size_t i = 0; i < t.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(t[i]);
  }
  s += close;
  return s;
}

template <class E>
struct Covering {
  E lower;
  E upper;
};

// Kind of a prime filter: principal with a generator, or secondary.
template <class E>
struct PrimeKind {
  bool principal = false;
  E generator{};  // valid only when principal
};

// Lazily evaluated locally-finite lattice: covers, meet, join and order are
// oracles over an element encoding; every interval [a,b] is finite.
template <class L>
concept LazyLattice = requires(const L& lat, const typename L::element_type& x) {
  { lat.leq(x, x) } -> std::convertible_to<bool>;
  { lat.meet(x, x) } -> std::same_as<typename L::element_type>;
  { lat.join(x, x) } -> std::same_as<typename L::element_type>;
  { lat.lower_covers(x) } -> std::convertible_to<std::vector<typename L::element_type>>;
  { lat.upper_covers_within(x, x) } -> std::convertible_to<std::vector<typename L::element_type>>;
};

// Built-in families additionally expose a symbolic prime-filter family.
template <class L>
concept SymbolicPrimes = LazyLattice<L> && requires(const L& lat, const typename L::element_type& x,
                                                    const typename L::prime_type& p) {
  { lat.prime_contains(p, x) } -> std::convertible_to<bool>;
  { lat.prime_kind(p) } -> std::convertible_to<PrimeKind<typename L::element_type>>;
};

// Canonical element order for tie-breaking; lexicographic on the encoding.
template <class E>
bool elem_less(const E& a, const E& b) {
  return a < b;
}

// ---------------------------------------------------------------------------
// Grid lattices: ℤⁿ (unbounded) and ℕⁿ (bounded below), componentwise order.
// Prime filters form one threshold-indexed chain family per axis.
class GridLattice {
 public:
  using element_type = Tuple;
  struct prime_type {
    int axis;
    Coord threshold;  // {x : x[axis] >= threshold}; >= 1 when bounded below
    bool operator==(const prime_type&) const = default;
  };

  GridLattice(int dims, bool bounded_below) : dims_(dims), bounded_(bounded_below) {}
  static GridLattice integers(int dims) { return GridLattice(dims, false); }
  static GridLattice naturals(int dims) { return GridLattice(dims, true); }

  int dims() const { return dims_; }
  bool bounded_below() const { return bounded_; }
  bool has_bottom() const { return bounded_; }
  Tuple bottom() const { return Tuple(dims_, 0); }
  std::string name() const { return (bounded_ ? "ngrid" : "zgrid") + std::to_string(dims_); }

  bool valid_element(const Tuple& x) const {
    if (static_cast<int>(x.size()) != dims_) return false;
    if (bounded_)
      for (Coord c : x)
        if (c < 0) return false;
    return true;
  }
  void require_element(const Tuple& x) const {
    if (!valid_element(x)) throw Error(name() + ": bad element " + tuple_to_string(x));
  }

  bool leq(const Tuple& x, const Tuple& y) const {
    require_element(x);
    require_element(y);
    for (int i = 0; i < dims_; ++i)
      if (x[i] > y[i]) return false;
    return true;
  }
  Tuple meet(const Tuple& x, const Tuple& y) const {
    require_element(x);
    require_element(y);
    Tuple z(dims_);
    for (int i = 0; i < dims_; ++i) z[i] = std::min(x[i], y[i]);
    return z;
  }
  Tuple join(const Tuple& x, const Tuple& y) const {
    require_element(x);
    require_element(y);
    Tuple z(dims_);
    for (int i = 0; i < dims_; ++i) z[i] = std::max(x[i], y[i]);
    return z;
  }

  std::vector<Tuple> lower_covers(const Tuple& x) const {
    require_element(x);
    std::vector<Tuple> out;
    for (int i = 0; i < dims_; ++i) {
      if (bounded_ && x[i] == 0) continue;
      Tuple y = x;
      --y[i];
      out.push_back(std::move(y));
    }
    std::sort(out.begin(), out.end());
    return out;
  }
  std::vector<Tuple> upper_covers(const Tuple& x) const {
    require_element(x);
    std::vector<Tuple> out;
    for (int i = 0; i < dims_; ++i) {
      Tuple y = x;
      ++y[i];
      out.push_back(std::move(y));
    }
    std::sort(out.begin(), out.end());
    return out;
  }
  std::vector<Tuple> upper_covers_within(const Tuple& x, const Tuple& hi) const {
    std::vector<Tuple> out;
    for (Tuple& y : upper_covers(x))
      if (leq(y, hi)) out.push_back(std::move(y));
    return out;
  }

  Coord rank_between(const Tuple& x, const Tuple& y) const {
    if (!leq(x, y)) throw NotComparable(name() + ": rank_between needs x <= y");
    Coord r = 0;
    for (int i = 0; i < dims_; ++i) r += y[i] - x[i];
    return r;
  }

  // -- symbolic primes --------------------------------------------------
  bool valid_prime(const prime_type& p) const {
    return p.axis >= 0 && p.axis < dims_ && (!bounded_ || p.threshold >= 1);
  }
  void require_prime(const prime_type& p) const {
    if (!valid_prime(p)) throw Error(name() + ": bad prime descriptor");
  }
  bool prime_contains(const prime_type& p, const Tuple& x) const {
    require_prime(p);
    require_element(x);
    return x[p.axis] >= p.threshold;
  }
  // Order inherited from the filter lattice (inverse inclusion): within a
  // family, a lower threshold is a larger filter, hence a smaller prime.
  bool prime_leq(const prime_type& p, const prime_type& q) const {
    return p.axis == q.axis && p.threshold <= q.threshold;
  }
  PrimeKind<Tuple> prime_kind(const prime_type& p) const {
    require_prime(p);
    if (!bounded_) return {false, {}};
    Tuple gen(dims_, 0);
    gen[p.axis] = p.threshold;
    return {true, gen};
  }
  std::vector<prime_type> primes_in_band(Coord lo, Coord hi) const {
    if (bounded_) lo = std::max<Coord>(lo, 1);
    std::vector<prime_type> out;
    for (int a = 0; a < dims_; ++a)
      for (Coord t = lo; t <= hi; ++t) out.push_back({a, t});
    return out;
  }

  // minimum of PF(x) ∩ p: bump the axis up to the threshold
  Tuple raise(const Tuple& x, const prime_type& p) const {
    require_prime(p);
    if (prime_contains(p, x))
      throw AlreadyMember(name() + ": " + tuple_to_string(x) + " already in prime");
    Tuple y = x;
    y[p.axis] = p.threshold;
    return y;
  }
  // maximum of PI(x) ∩ complement(p): drop the axis just below the threshold
  Tuple lower(const Tuple& x, const prime_type& p) const {
    require_prime(p);
    if (!prime_contains(p, x))
      throw AlreadyMember(name() + ": " + tuple_to_string(x) + " already outside prime");
    Tuple y = x;
    y[p.axis] = p.threshold - 1;
    return y;
  }

  prime_type separator(const Covering<Tuple>& c) const {
    require_element(c.lower);
    require_element(c.upper);
    int axis = -1;
    for (int i = 0; i < dims_; ++i) {
      if (c.upper[i] == c.lower[i] + 1) {
        if (axis >= 0) throw NotACovering(name() + ": elements differ on two axes");
        axis = i;
      } else if (c.upper[i] != c.lower[i]) {
        throw NotACovering(name() + ": not a covering pair");
      }
    }
    if (axis < 0) throw NotACovering(name() + ": equal elements");
    return {axis, c.upper[axis]};
  }

 private:
  int dims_;
  bool bounded_;
};

// ---------------------------------------------------------------------------
// 𝔹_fin: finite subsets of ℕ under inclusion, encoded as strictly increasing
// tuples.  Prime filters form an ℕ-indexed antichain, one per member index;
// upper covers are infinite, so only bounded upper covers are exposed.
class BFinLattice {
 public:
  using element_type = Tuple;
  struct prime_type {
    Coord index;  // {S : index ∈ S}
    bool operator==(const prime_type&) const = default;
  };

  bool has_bottom() const { return true; }
  Tuple bottom() const { return {}; }
  std::string name() const { return "bfin"; }

  bool valid_element(const Tuple& x) const {
    for (std::size_t i = 0; i < x.size(); ++i) {
      if (x[i] < 0) return false;
      if (i && x[i] <= x[i - 1]) return false;
    }
    return true;
  }
  void require_element(const Tuple& x) const {
    if (!valid_element(x))
      throw Error("bfin: element must be a strictly increasing set " + tuple_to_string(x, '{', '}'));
  }

  bool contains_index(const Tuple& x, Coord k) const {
    return std::binary_search(x.begin(), x.end(), k);
  }

  bool leq(const Tuple& x, const Tuple& y) const {
    require_element(x);
    require_element(y);
    return std::includes(y.begin(), y.end(), x.begin(), x.end());
  }
  Tuple meet(const Tuple& x, const Tuple& y) const {
    require_element(x);
    require_element(y);
    Tuple z;
    std::set_intersection(x.begin(), x.end(), y.begin(), y.end(), std::back_inserter(z));
    return z;
  }
  Tuple join(const Tuple& x, const Tuple& y) const {
    require_element(x);
    require_element(y);
    Tuple z;
    std::set_union(x.begin(), x.end(), y.begin(), y.end(), std::back_inserter(z));
    return z;
  }

  std::vector<Tuple> lower_covers(const Tuple& x) const {
    require_element(x);
    std::vector<Tuple> out;
    for (std::size_t i = 0; i < x.size(); ++i) {
      Tuple y;
      y.reserve(x.size() - 1);
      for (std::size_t j = 0; j < x.size(); ++j)
        if (j != i) y.push_back(x[j]);
      out.push_back(std::move(y));
    }
    std::sort(out.begin(), out.end());
    return out;
  }
  std::vector<Tuple> upper_covers(const Tuple&) const {
    throw UnsupportedLattice("bfin: every element has infinitely many upper covers");
  }
  std::vector<Tuple> upper_covers_within(const Tuple& x, const Tuple& hi) const {
    require_element(x);
    require_element(hi);
    std::vector<Tuple> out;
    for (Coord k : hi) {
      if (contains_index(x, k)) continue;
      Tuple y = x;
      y.insert(std::upper_bound(y.begin(), y.end(), k), k);
      if (leq(y, hi)) out.push_back(std::move(y));
    }
    std::sort(out.begin(), out.end());
    return out;
  }

  Coord rank_between(const Tuple& x, const Tuple& y) const {
    if (!leq(x, y)) throw NotComparable("bfin: rank_between needs x ⊆ y");
    return static_cast<Coord>(y.size() - x.size());
  }

  bool valid_prime(const prime_type& p) const { return p.index >= 0; }
  void require_prime(const prime_type& p) const {
    if (!valid_prime(p)) throw Error("bfin: bad prime descriptor");
  }
  bool prime_contains(const prime_type& p, const Tuple& x) const {
    require_prime(p);
    require_element(x);
    return contains_index(x, p.index);
  }
  bool prime_leq(const prime_type& p, const prime_type& q) const { return p.index == q.index; }
  PrimeKind<Tuple> prime_kind(const prime_type& p) const {
    require_prime(p);
    return {true, Tuple{p.index}};
  }
  std::vector<prime_type> primes_in_band(Coord lo, Coord hi) const {
    std::vector<prime_type> out;
    for (Coord k = std::max<Coord>(lo, 0); k <= hi; ++k) out.push_back({k});
    return out;
  }

  Tuple raise(const Tuple& x, const prime_type& p) const {
    require_prime(p);
    if (prime_contains(p, x))
      throw AlreadyMember("bfin: " + tuple_to_string(x, '{', '}') + " already in prime");
    Tuple y = x;
    y.insert(std::upper_bound(y.begin(), y.end(), p.index), p.index);
    return y;
  }
  Tuple lower(const Tuple& x, const prime_type& p) const {
    require_prime(p);
    if (!prime_contains(p, x))
      throw AlreadyMember("bfin: " + tuple_to_string(x, '{', '}') + " already outside prime");
    Tuple y;
    y.reserve(x.size() - 1);
    for (Coord k : x)
      if (k != p.index) y.push_back(k);
    return y;
  }

  prime_type separator(const Covering<Tuple>& c) const {
    require_element(c.lower);
    require_element(c.upper);
    Tuple added;
    std::set_difference(c.upper.begin(), c.upper.end(), c.lower.begin(), c.lower.end(),
                        std::back_inserter(added));
    if (added.size() != 1 || c.upper.size() != c.lower.size() + 1)
      throw NotACovering("bfin: not a covering pair");
    return {added[0]};
  }
};

// ---------------------------------------------------------------------------
// A finite distributive lattice viewed through the lazy interface; elements
// are lattice indices and primes are indices into the principal prime poset.
class FiniteAdapter {
 public:
  using element_type = int;
  using prime_type = int;

  explicit FiniteAdapter(FiniteLattice lattice) : l_(std::move(lattice)) {
    if (!l_.is_distributive())
      throw NotDistributive("finite adapter requires a distributive lattice");
    primes_ = principal_primes(l_);
    ranks_ = rank_info(l_);
    if (!ranks_.graded) throw Error("finite adapter: lattice is not graded");
  }

  const FiniteLattice& lattice() const { return l_; }
  const PrimePoset& primes() const { return primes_; }
  bool has_bottom() const { return true; }
  int bottom() const { return l_.bottom(); }
  std::string name() const { return "finite" + std::to_string(l_.n()); }

  void require_element(int x) const {
    if (x < 0 || x >= l_.n()) throw Error("finite adapter: element index out of range");
  }
  bool leq(int x, int y) const {
    require_element(x);
    require_element(y);
    return l_.leq(x, y);
  }
  int meet(int x, int y) const { return l_.meet(x, y); }
  int join(int x, int y) const { return l_.join(x, y); }

  std::vector<int> lower_covers(int x) const {
    require_element(x);
    return l_.poset().lower_covers_of(x);
  }
  std::vector<int> upper_covers(int x) const {
    require_element(x);
    return l_.poset().upper_covers_of(x);
  }
  std::vector<int> upper_covers_within(int x, int hi) const {
    std::vector<int> out;
    for (int y : upper_covers(x))
      if (l_.leq(y, hi)) out.push_back(y);
    return out;
  }

  Coord rank_between(int x, int y) const {
    if (!leq(x, y)) throw NotComparable("finite adapter: rank_between needs x <= y");
    return ranks_.rank[y] - ranks_.rank[x];
  }

  void require_prime(prime_type p) const {
    if (p < 0 || p >= static_cast<int>(primes_.primes.size()))
      throw Error("finite adapter: prime index out of range");
  }
  bool prime_contains(prime_type p, int x) const {
    require_prime(p);
    require_element(x);
    return primes_.primes[p].test(x);
  }
  bool prime_leq(prime_type p, prime_type q) const {
    require_prime(p);
    require_prime(q);
    return primes_.primes[q].is_subset_of(primes_.primes[p]);
  }
  PrimeKind<int> prime_kind(prime_type p) const {
    require_prime(p);
    return {true, *primes_.witness[p]};
  }
  std::vector<prime_type> primes_in_band(Coord, Coord) const {
    std::vector<prime_type> out(primes_.primes.size());
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = static_cast<int>(i);
    return out;
  }

  int raise(int x, prime_type p) const {
    if (prime_contains(p, x)) throw AlreadyMember("finite adapter: element already in prime");
    Subset fx = principal_filter(l_, x) & primes_.primes[p];
    int acc = -1;
    for (int z = fx.first(); z >= 0; z = fx.next(z)) acc = acc < 0 ? z : l_.meet(acc, z);
    return acc;
  }
  int lower(int x, prime_type p) const {
    if (!prime_contains(p, x)) throw AlreadyMember("finite adapter: element already outside prime");
    Subset ix = principal_ideal(l_, x).minus(primes_.primes[p]);
    int acc = -1;
    for (int z = ix.first(); z >= 0; z = ix.next(z)) acc = acc < 0 ? z : l_.join(acc, z);
    return acc;
  }

  prime_type separator(const Covering<int>& c) const {
    require_element(c.lower);
    require_element(c.upper);
    bool is_cover = false;
    for (int y : l_.poset().upper_covers_of(c.lower)) is_cover |= (y == c.upper);
    if (!is_cover) throw NotACovering("finite adapter: not a covering pair");
    int found = -1;
    for (int p = 0; p < static_cast<int>(primes_.primes.size()); ++p)
      if (primes_.primes[p].test(c.upper) && !primes_.primes[p].test(c.lower)) {
        if (found >= 0) throw Error("finite adapter: separator not unique");
        found = p;
      }
    if (found < 0) throw Error("finite adapter: no separating prime on a covering");
    return found;
  }

 private:
  FiniteLattice l_;
  PrimePoset primes_;
  RankInfo ranks_;
};

// ---------------------------------------------------------------------------
// Componentwise product of two lazy lattices.
template <class A, class B>
class ProductLattice {
 public:
  using element_type = std::pair<typename A::element_type, typename B::element_type>;
  using prime_type = std::variant<typename A::prime_type, typename B::prime_type>;

  ProductLattice(A a, B b) : a_(std::move(a)), b_(std::move(b)) {}

  const A& left() const { return a_; }
  const B& right() const { return b_; }
  bool has_bottom() const { return a_.has_bottom() && b_.has_bottom(); }
  element_type bottom() const { return {a_.bottom(), b_.bottom()}; }
  std::string name() const { return "product(" + a_.name() + "," + b_.name() + ")"; }

  bool leq(const element_type& x, const element_type& y) const {
    return a_.leq(x.first, y.first) && b_.leq(x.second, y.second);
  }
  element_type meet(const element_type& x, const element_type& y) const {
    return {a_.meet(x.first, y.first), b_.meet(x.second, y.second)};
  }
  element_type join(const element_type& x, const element_type& y) const {
    return {a_.join(x.first, y.first), b_.join(x.second, y.second)};
  }

  std::vector<element_type> lower_covers(const element_type& x) const {
    std::vector<element_type> out;
    for (const auto& ca : a_.lower_covers(x.first)) out.push_back({ca, x.second});
    for (const auto& cb : b_.lower_covers(x.second)) out.push_back({x.first, cb});
    std::sort(out.begin(), out.end());
    return out;
  }
  std::vector<element_type> upper_covers_within(const element_type& x, const element_type& hi) const {
    std::vector<element_type> out;
    for (const auto& ca : a_.upper_covers_within(x.first, hi.first)) out.push_back({ca, x.second});
    for (const auto& cb : b_.upper_covers_within(x.second, hi.second)) out.push_back({x.first, cb});
    std::sort(out.begin(), out.end());
    return out;
  }

  Coord rank_between(const element_type& x, const element_type& y) const {
    return a_.rank_between(x.first, y.first) + b_.rank_between(x.second, y.second);
  }

  bool prime_contains(const prime_type& p, const element_type& x) const {
    if (p.index() == 0) return a_.prime_contains(std::get<0>(p), x.first);
    return b_.prime_contains(std::get<1>(p), x.second);
  }
  PrimeKind<element_type> prime_kind(const prime_type& p) const {
    // A one-sided prime is principal exactly when the inner prime is
    // principal and the other factor has a bottom to pin the generator.
    if (p.index() == 0) {
      auto k = a_.prime_kind(std::get<0>(p));
      if (k.principal && b_.has_bottom()) return {true, {k.generator, b_.bottom()}};
      return {false, {}};
    }
    auto k = b_.prime_kind(std::get<1>(p));
    if (k.principal && a_.has_bottom()) return {true, {a_.bottom(), k.generator}};
    return {false, {}};
  }
  std::vector<prime_type> primes_in_band(Coord lo, Coord hi) const {
    std::vector<prime_type> out;
    for (const auto& p : a_.primes_in_band(lo, hi)) out.push_back(prime_type(std::in_place_index<0>, p));
    for (const auto& p : b_.primes_in_band(lo, hi)) out.push_back(prime_type(std::in_place_index<1>, p));
    return out;
  }

  element_type raise(const element_type& x, const prime_type& p) const {
    if (p.index() == 0) return {a_.raise(x.first, std::get<0>(p)), x.second};
    return {x.first, b_.raise(x.second, std::get<1>(p))};
  }
  element_type lower(const element_type& x, const prime_type& p) const {
    if (p.index() == 0) return {a_.lower(x.first, std::get<0>(p)), x.second};
    return {x.first, b_.lower(x.second, std::get<1>(p))};
  }

  prime_type separator(const Covering<element_type>& c) const {
    bool left_moves = !(c.lower.first == c.upper.first);
    bool right_moves = !(c.lower.second == c.upper.second);
    if (left_moves == right_moves) throw NotACovering(name() + ": not a covering pair");
    if (left_moves)
      return prime_type(std::in_place_index<0>, a_.separator({c.lower.first, c.upper.first}));
    return prime_type(std::in_place_index<1>, b_.separator({c.lower.second, c.upper.second}));
  }

 private:
  A a_;
  B b_;
};

// ---------------------------------------------------------------------------
// Generic helpers over the lazy interface.

constexpr std::size_t kDefaultWindowBound = 4096;

// All elements of [lo, hi], in element order, by BFS along bounded upper
// covers.
template <class L, class E = typename L::element_type>
std::vector<E> interval_elements(const L& lat, const E& lo, const E& hi,
                                 std::size_t bound = kDefaultWindowBound) {
  if (!lat.leq(lo, hi)) throw NotComparable("interval requires lo <= hi");
  std::set<E> seen;
  std::vector<E> work{lo};
  seen.insert(lo);
  while (!work.empty()) {
    E cur = work.back();
    work.pop_back();
    for (E& nxt : lat.upper_covers_within(cur, hi)) {
      if (seen.count(nxt)) continue;
      if (seen.size() >= bound)
        throw WindowTooLarge("interval exceeds bound " + std::to_string(bound));
      work.push_back(nxt);
      seen.insert(std::move(nxt));
    }
  }
  return std::vector<E>(seen.begin(), seen.end());
}

// x -< y: x < y with nothing strictly between.
template <class L, class E = typename L::element_type>
bool is_covering_pair(const L& lat, const E& lo, const E& hi) {
  if (lo == hi || !lat.leq(lo, hi)) return false;
  for (const E& z : lat.upper_covers_within(lo, hi))
    if (z == hi) return true;
  return false;
}

template <class L, class E = typename L::element_type>
void require_covering(const L& lat, const Covering<E>& c) {
  if (!is_covering_pair(lat, c.lower, c.upper)) throw NotACovering("not a covering pair");
}

// Saturated chain length from x to y, climbing canonical covers.  Built-in
// families override this with a closed form via rank_between.
template <class L, class E = typename L::element_type>
Coord rank_diff(const L& lat, const E& x, const E& y) {
  if constexpr (requires { lat.rank_between(x, y); }) {
    return lat.rank_between(x, y);
  } else {
    if (!lat.leq(x, y)) throw NotComparable("rank_diff requires x <= y");
    Coord steps = 0;
    E cur = x;
    while (!(cur == y)) {
      auto ups = lat.upper_covers_within(cur, y);
      if (ups.empty()) throw Error("rank_diff: no saturated chain found");
      cur = ups.front();
      ++steps;
    }
    return steps;
  }
}

// Primes within the band whose filter contains x.
template <class L>
std::vector<typename L::prime_type> phi_restricted(const L& lat, const typename L::element_type& x,
                                                   Coord lo, Coord hi) {
  std::vector<typename L::prime_type> out;
  for (const auto& p : lat.primes_in_band(lo, hi))
    if (lat.prime_contains(p, x)) out.push_back(p);
  return out;
}

}  // namespace latrep
