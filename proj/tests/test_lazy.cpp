#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <vector>

#include "latrep/lazy.hpp"
#include "latrep/rng.hpp"
#include "latrep/window.hpp"

using namespace latrep;

namespace {

// --- independent window oracles ---------------------------------------------

// Every grid point in the box [lo, hi], by odometer; no lattice code involved.
std::vector<Tuple> grid_box(const Tuple& lo, const Tuple& hi) {
  std::vector<Tuple> out;
  Tuple cur = lo;
  for (;;) {
    out.push_back(cur);
    int i = static_cast<int>(cur.size()) - 1;
    while (i >= 0 && cur[i] == hi[i]) {
      cur[i] = lo[i];
      --i;
    }
    if (i < 0) break;
    ++cur[i];
  }
  return out;
}

// Every subset of `hi` that contains `lo`, via submask enumeration.
std::vector<Tuple> bfin_box(const Tuple& lo, const Tuple& hi) {
  std::vector<Coord> free_elems;
  for (Coord k : hi)
    if (!std::binary_search(lo.begin(), lo.end(), k)) free_elems.push_back(k);
  std::vector<Tuple> out;
  for (unsigned mask = 0; mask < (1u << free_elems.size()); ++mask) {
    Tuple t = lo;
    for (std::size_t i = 0; i < free_elems.size(); ++i)
      if (mask & (1u << i)) t.push_back(free_elems[i]);
    std::sort(t.begin(), t.end());
    out.push_back(std::move(t));
  }
  std::sort(out.begin(), out.end());
  return out;
}

// Minimum of {z in box : z >= x, z in p}: the meet-fold of the candidates,
// which must itself be a candidate.
template <class L>
Tuple min_in_prime_oracle(const L& lat, const std::vector<Tuple>& box, const Tuple& x,
                          const typename L::prime_type& p) {
  std::vector<Tuple> candidates;
  for (const Tuple& z : box)
    if (lat.leq(x, z) && lat.prime_contains(p, z)) candidates.push_back(z);
  REQUIRE_FALSE(candidates.empty());
  Tuple best = candidates[0];
  for (const Tuple& z : candidates) best = lat.meet(best, z);
  REQUIRE(std::find(candidates.begin(), candidates.end(), best) != candidates.end());
  return best;
}

template <class L>
Tuple max_outside_prime_oracle(const L& lat, const std::vector<Tuple>& box, const Tuple& x,
                               const typename L::prime_type& p) {
  std::vector<Tuple> candidates;
  for (const Tuple& z : box)
    if (lat.leq(z, x) && !lat.prime_contains(p, z)) candidates.push_back(z);
  REQUIRE_FALSE(candidates.empty());
  Tuple best = candidates[0];
  for (const Tuple& z : candidates) best = lat.join(best, z);
  REQUIRE(std::find(candidates.begin(), candidates.end(), best) != candidates.end());
  return best;
}

// Longest and shortest saturated chains from x to y within the interval; both
// must agree in a graded lattice and give the rank difference.
template <class L>
std::pair<Coord, Coord> chain_lengths_oracle(const L& lat, const Tuple& x, const Tuple& y) {
  std::vector<Tuple> box = interval_elements(lat, x, y);
  std::vector<Coord> longest(box.size(), -1), shortest(box.size(), -1);
  auto idx = [&](const Tuple& t) {
    return static_cast<int>(std::lower_bound(box.begin(), box.end(), t) - box.begin());
  };
  longest[idx(x)] = shortest[idx(x)] = 0;
  // box is sorted lexicographically, which is not a linear extension; sweep
  // until fixpoint instead.
  bool changed = true;
  while (changed) {
    changed = false;
    for (const Tuple& t : box) {
      int i = idx(t);
      if (longest[i] < 0) continue;
      for (const Tuple& u : lat.upper_covers_within(t, y)) {
        int j = idx(u);
        if (longest[j] < longest[i] + 1) {
          longest[j] = longest[i] + 1;
          changed = true;
        }
        if (shortest[j] < 0 || shortest[j] > shortest[i] + 1) {
          shortest[j] = shortest[i] + 1;
          changed = true;
        }
      }
    }
  }
  return {shortest[idx(y)], longest[idx(y)]};
}

Tuple random_point(Rng& rng, int dims, Coord lo, Coord hi) {
  Tuple t(dims);
  for (int i = 0; i < dims; ++i) t[i] = rng.range(lo, hi);
  return t;
}

Tuple random_subset(Rng& rng, Coord universe, int den = 2) {
  Tuple t;
  for (Coord k = 0; k < universe; ++k)
    if (rng.chance(1, den)) t.push_back(k);
  return t;
}

}  // namespace

TEST_CASE("grid basics") {
  GridLattice z2 = GridLattice::integers(2);
  CHECK(z2.upper_covers({0, 0}) == std::vector<Tuple>{{0, 1}, {1, 0}});
  CHECK(z2.lower_covers({0, 0}) == std::vector<Tuple>{{-1, 0}, {0, -1}});
  CHECK(z2.meet({2, -1}, {0, 3}) == Tuple{0, -1});
  CHECK(z2.join({2, -1}, {0, 3}) == Tuple{2, 3});
  CHECK(z2.leq({0, 0}, {1, 2}));
  CHECK_FALSE(z2.leq({1, 0}, {0, 2}));
  CHECK_FALSE(z2.has_bottom());

  GridLattice n2 = GridLattice::naturals(2);
  CHECK(n2.lower_covers({0, 3}) == std::vector<Tuple>{{0, 2}});
  CHECK(n2.lower_covers({0, 0}).empty());
  CHECK(n2.has_bottom());
  CHECK_THROWS_AS(n2.leq({-1, 0}, {0, 0}), Error);
}

TEST_CASE("bfin basics") {
  BFinLattice b;
  CHECK(b.lower_covers({1, 3}) == std::vector<Tuple>{{1}, {3}});
  CHECK(b.meet({1, 3}, {3, 5}) == Tuple{3});
  CHECK(b.join({1, 3}, {3, 5}) == Tuple{1, 3, 5});
  CHECK(b.leq({}, {1}));
  CHECK_THROWS_AS(b.upper_covers({1}), UnsupportedLattice);
  CHECK(b.upper_covers_within({}, {1, 2}) == std::vector<Tuple>{{1}, {2}});
  CHECK_THROWS_AS(b.require_element({3, 1}), Error);
}

TEST_CASE("interval windows") {
  GridLattice z2 = GridLattice::integers(2);
  Window<GridLattice> w = make_window(z2, {0, 0}, {2, 2});
  CHECK(w.elements.size() == 9);
  CHECK(w.lattice.is_distributive());
  CHECK(w.to_global(w.lattice.bottom()) == Tuple{0, 0});
  CHECK(w.to_global(w.lattice.top()) == Tuple{2, 2});
  for (int i = 0; i < w.lattice.n(); ++i) CHECK(w.from_global(w.to_global(i)) == i);

  BFinLattice b;
  Window<BFinLattice> wb = make_window(b, {}, {1, 2, 3});
  CHECK(wb.elements.size() == 8);
  CHECK(wb.lattice.is_distributive());
  CHECK(birkhoff_iso_check(wb.lattice).holds);

  CHECK_THROWS_AS(make_window(z2, {0, 0}, {100, 100}, 64), WindowTooLarge);
  CHECK_THROWS_AS(make_window(z2, {1, 0}, {0, 0}), NotComparable);
}

TEST_CASE("interval elements match the box oracles") {
  GridLattice z2 = GridLattice::integers(2);
  auto got = interval_elements(z2, {-1, 0}, {1, 2});
  auto expect = grid_box({-1, 0}, {1, 2});
  std::sort(expect.begin(), expect.end());
  CHECK(got == expect);

  BFinLattice b;
  CHECK(interval_elements(b, {2}, {1, 2, 5, 7}) == bfin_box({2}, {1, 2, 5, 7}));
}

TEST_CASE("primes_in_band and kinds") {
  GridLattice z2 = GridLattice::integers(2);
  auto zp = z2.primes_in_band(-1, 1);
  CHECK(zp.size() == 6);
  for (const auto& p : zp) CHECK_FALSE(z2.prime_kind(p).principal);

  GridLattice n2 = GridLattice::naturals(2);
  auto np = n2.primes_in_band(-1, 2);
  CHECK(np.size() == 4);  // thresholds clamp to >= 1
  for (const auto& p : np) {
    auto k = n2.prime_kind(p);
    CHECK(k.principal);
    CHECK(n2.prime_contains(p, k.generator));
    CHECK(n2.rank_between(n2.bottom(), k.generator) == p.threshold);
  }

  BFinLattice b;
  auto bp = b.primes_in_band(0, 4);
  CHECK(bp.size() == 5);
  CHECK(b.prime_kind(bp[3]).generator == Tuple{3});
}

TEST_CASE("descriptor predicates restricted to a window are prime filters") {
  GridLattice z2 = GridLattice::integers(2);
  Window<GridLattice> w = make_window(z2, {-2, -2}, {2, 2});
  // thresholds strictly above the window floor keep the restriction proper
  for (const auto& p : z2.primes_in_band(-1, 2)) {
    Subset s(w.lattice.n());
    for (int i = 0; i < w.lattice.n(); ++i)
      if (z2.prime_contains(p, w.to_global(i))) s.set(i);
    REQUIRE(is_lattice_filter(w.lattice, s));
    REQUIRE(is_prime_filter(w.lattice, s));
  }

  BFinLattice b;
  Window<BFinLattice> wb = make_window(b, {}, {0, 1, 2, 3});
  for (const auto& p : b.primes_in_band(0, 3)) {
    Subset s(wb.lattice.n());
    for (int i = 0; i < wb.lattice.n(); ++i)
      if (b.prime_contains(p, wb.to_global(i))) s.set(i);
    REQUIRE(is_prime_filter(wb.lattice, s));
  }
}

TEST_CASE("raise fixtures") {
  GridLattice z2 = GridLattice::integers(2);
  CHECK(z2.raise({0, 0}, {1, 2}) == Tuple{0, 2});  // axis 1, threshold 2
  CHECK(z2.raise({0, 0}, {0, 1}) == Tuple{1, 0});  // axis 0, threshold 1
  CHECK_THROWS_AS(z2.raise({1, 0}, {0, 1}), AlreadyMember);

  BFinLattice b;
  CHECK(b.raise({1, 3}, {5}) == Tuple{1, 3, 5});
  CHECK_THROWS_AS(b.raise({1, 3, 5}, {5}), AlreadyMember);
}

TEST_CASE("lower fixtures") {
  GridLattice z2 = GridLattice::integers(2);
  CHECK_THROWS_AS(z2.lower({3, 5}, {0, 4}), AlreadyMember);  // already outside {a>=4}
  CHECK(z2.lower({4, 5}, {0, 4}) == Tuple{3, 5});

  BFinLattice b;
  CHECK(b.lower({1, 3, 5}, {5}) == Tuple{1, 3});
  CHECK_THROWS_AS(b.lower({1, 3}, {5}), AlreadyMember);
}

TEST_CASE("separator fixtures") {
  GridLattice z2 = GridLattice::integers(2);
  auto p = z2.separator({{3, 5}, {4, 5}});
  CHECK(p.axis == 0);
  CHECK(p.threshold == 4);
  CHECK_THROWS_AS(z2.separator({{3, 5}, {4, 6}}), NotACovering);

  BFinLattice b;
  CHECK(b.separator({{1, 3}, {1, 3, 5}}).index == 5);
  CHECK_THROWS_AS(b.separator({{1, 3}, {1, 4, 5}}), NotACovering);
}

TEST_CASE("finite adapter separator via the prime poset") {
  // chain 0 < 1 < 2, covering 1 -< 2 separates at PF(2)
  std::vector<CoverPair> cov = {{0, 1}, {1, 2}};
  FiniteAdapter ad(lattice_from_poset(poset_from_covers(3, cov)));
  auto p = ad.separator({1, 2});
  CHECK(ad.primes().primes[p] == Subset::of(3, {2}));
  CHECK(ad.prime_kind(p).generator == 2);
}

TEST_CASE("rank_diff fixtures") {
  GridLattice z2 = GridLattice::integers(2);
  CHECK(rank_diff(z2, {0, 0}, {2, 3}) == 5);
  CHECK(rank_diff(z2, {1, 1}, {1, 1}) == 0);
  CHECK_THROWS_AS(rank_diff(z2, {1, 0}, {0, 3}), NotComparable);

  BFinLattice b;
  CHECK(rank_diff(b, {}, {1, 3, 5}) == 3);
}

TEST_CASE("raise and lower match the window-search oracles") {
  Rng rng(606);
  GridLattice z2 = GridLattice::integers(2);
  for (int t = 0; t < 120; ++t) {
    Tuple x = random_point(rng, 2, -5, 5);
    GridLattice::prime_type p{static_cast<int>(rng.below(2)), rng.range(-6, 6)};
    Tuple lo(2), hi(2);
    for (int i = 0; i < 2; ++i) {
      lo[i] = std::min(x[i], p.threshold - 1) - 1;
      hi[i] = std::max(x[i], p.threshold) + 2;
    }
    auto box = grid_box(lo, hi);
    if (!z2.prime_contains(p, x)) {
      Tuple got = z2.raise(x, p);
      CHECK(got == min_in_prime_oracle(z2, box, x, p));
      CHECK(z2.leq(x, got));
      CHECK(z2.prime_contains(p, got));
    } else {
      Tuple got = z2.lower(x, p);
      CHECK(got == max_outside_prime_oracle(z2, box, x, p));
      CHECK(z2.leq(got, x));
      CHECK_FALSE(z2.prime_contains(p, got));
    }
  }

  BFinLattice b;
  for (int t = 0; t < 120; ++t) {
    Tuple x = random_subset(rng, 8);
    BFinLattice::prime_type p{rng.range(0, 9)};
    Tuple hi = x;
    for (Coord k = 0; k < 10; ++k)
      if (!b.contains_index(hi, k) && (k == p.index || rng.chance(1, 3)))
        hi.insert(std::upper_bound(hi.begin(), hi.end(), k), k);
    auto box = bfin_box({}, hi);
    if (!b.prime_contains(p, x)) {
      CHECK(b.raise(x, p) == min_in_prime_oracle(b, box, x, p));
    } else {
      CHECK(b.lower(x, p) == max_outside_prime_oracle(b, box, x, p));
    }
  }
}

TEST_CASE("separator is the unique phi difference and survives window growth") {
  Rng rng(707);
  GridLattice z2 = GridLattice::integers(2);
  BFinLattice b;
  for (int t = 0; t < 100; ++t) {
    Tuple x = random_point(rng, 2, -5, 5);
    int axis = rng.below(2);
    Tuple y = x;
    ++y[axis];
    auto sep = z2.separator({x, y});
    int found = 0;
    for (const auto& p : z2.primes_in_band(-8, 8))
      if (z2.prime_contains(p, y) && !z2.prime_contains(p, x)) {
        ++found;
        CHECK(p == sep);
      }
    CHECK(found == 1);
  }
  for (int t = 0; t < 100; ++t) {
    Tuple x = random_subset(rng, 8);
    Coord extra = rng.range(0, 9);
    if (b.contains_index(x, extra)) continue;
    Tuple y = b.raise(x, {extra});
    CHECK(b.separator({x, y}).index == extra);
  }
  // window-restriction stability: the window separator is the restriction of
  // the symbolic separator, for nested windows
  Covering<Tuple> c{{0, 0}, {1, 0}};
  auto sep = z2.separator(c);
  for (Coord r : {1, 2, 3}) {
    Window<GridLattice> w = make_window(z2, {-r, -r}, {r, r});
    Subset ws = window_separator(w, w.from_global(c.lower), w.from_global(c.upper));
    Subset restricted(w.lattice.n());
    for (int i = 0; i < w.lattice.n(); ++i)
      if (z2.prime_contains(sep, w.to_global(i))) restricted.set(i);
    REQUIRE(ws == restricted);
  }
}

TEST_CASE("rank_diff matches saturated chain lengths in windows") {
  Rng rng(808);
  GridLattice z2 = GridLattice::integers(2);
  BFinLattice b;
  for (int t = 0; t < 60; ++t) {
    Tuple x = random_point(rng, 2, -5, 5);
    Tuple y = x;
    y[0] += rng.below(4);
    y[1] += rng.below(4);
    auto [shortest, longest] = chain_lengths_oracle(z2, x, y);
    REQUIRE(shortest == longest);
    REQUIRE(rank_diff(z2, x, y) == shortest);
  }
  for (int t = 0; t < 60; ++t) {
    Tuple x = random_subset(rng, 6);
    Tuple y = x;
    for (Coord k = 6; k < 10; ++k)
      if (rng.chance(1, 2)) y.push_back(k);
    auto [shortest, longest] = chain_lengths_oracle(b, x, y);
    REQUIRE(shortest == longest);
    REQUIRE(rank_diff(b, x, y) == shortest);
  }
}

TEST_CASE("phi_restricted fixtures") {
  GridLattice z2 = GridLattice::integers(2);
  auto primes = phi_restricted(z2, {1, 2}, -3, 3);
  CHECK(primes.size() == 11);  // axis 0: -3..1, axis 1: -3..2
  for (const auto& p : primes) CHECK(z2.prime_contains(p, {1, 2}));

  BFinLattice b;
  auto bp = phi_restricted(b, {1, 3}, 0, 9);
  REQUIRE(bp.size() == 2);
  CHECK(bp[0].index == 1);
  CHECK(bp[1].index == 3);

  // down-closed in the band's prime order
  Rng rng(909);
  for (int t = 0; t < 50; ++t) {
    Tuple x = random_point(rng, 2, -4, 4);
    auto in_phi = phi_restricted(z2, x, -5, 5);
    for (const auto& p : z2.primes_in_band(-5, 5))
      for (const auto& q : in_phi)
        if (z2.prime_leq(p, q))
          REQUIRE(std::find(in_phi.begin(), in_phi.end(), p) != in_phi.end());
  }
}

TEST_CASE("raise and lower invert each other across a covering") {
  Rng rng(4242);
  GridLattice z2 = GridLattice::integers(2);
  BFinLattice b;
  for (int t = 0; t < 80; ++t) {
    Tuple x = random_point(rng, 2, -5, 5);
    int axis = rng.below(2);
    GridLattice::prime_type p{axis, x[axis] + 1};  // next threshold: a cover move
    Tuple y = z2.raise(x, p);
    REQUIRE(is_covering_pair(z2, x, y));
    REQUIRE(z2.lower(y, p) == x);

    GridLattice::prime_type far{axis, x[axis] + 2 + rng.below(3)};
    REQUIRE_FALSE(is_covering_pair(z2, x, z2.raise(x, far)));  // skipped thresholds: no cover

    Tuple s = random_subset(rng, 8);
    Coord k = rng.range(0, 9);
    if (b.contains_index(s, k)) continue;
    Tuple u = b.raise(s, {k});
    REQUIRE(is_covering_pair(b, s, u));  // antichain primes: always one cover move
    REQUIRE(b.lower(u, {k}) == s);
  }
}

TEST_CASE("the bounded grid is finitary: window filters are all principal") {
  GridLattice n1 = GridLattice::naturals(1);
  Window<GridLattice> w = make_window(n1, {0}, {5});
  FilterLattice fl = enumerate_filters(w.lattice);
  CHECK(fl.all_principal);
  CHECK(fl.filters.size() == 6);
  // ... and the window's prime filters are the band primes restricted
  PrimePoset pp = prime_poset_from(w.lattice, fl);
  auto band = n1.primes_in_band(1, 5);
  REQUIRE(pp.primes.size() == band.size());
  for (const auto& p : band) {
    Subset restricted(w.lattice.n());
    for (int i = 0; i < w.lattice.n(); ++i)
      if (n1.prime_contains(p, w.to_global(i))) restricted.set(i);
    CHECK(pp.index_of(restricted) >= 0);
  }
}

TEST_CASE("grid window join-irreducibles sit on the boundary") {
  GridLattice z2 = GridLattice::integers(2);
  Window<GridLattice> w = make_window(z2, {-2, -2}, {2, 2});
  Subset ji = join_irreducibles(w.lattice);
  for (int i = 0; i < w.lattice.n(); ++i) {
    Tuple t = w.to_global(i);
    bool boundary = (t[0] == -2) || (t[1] == -2);
    bool interior_nonbottom = !boundary;
    if (ji.test(i)) REQUIRE_FALSE(interior_nonbottom);
  }
}

TEST_CASE("product lattice agrees with the two-dimensional grid") {
  GridLattice z1 = GridLattice::integers(1);
  ProductLattice<GridLattice, GridLattice> prod(z1, z1);
  GridLattice z2 = GridLattice::integers(2);
  Rng rng(1001);
  for (int t = 0; t < 60; ++t) {
    Tuple a = random_point(rng, 2, -4, 4), b2 = random_point(rng, 2, -4, 4);
    std::pair<Tuple, Tuple> x{{a[0]}, {a[1]}}, y{{b2[0]}, {b2[1]}};
    CHECK(prod.leq(x, y) == z2.leq(a, b2));
    auto m = prod.meet(x, y);
    CHECK(Tuple{m.first[0], m.second[0]} == z2.meet(a, b2));
    CHECK(prod.lower_covers(x).size() == z2.lower_covers(a).size());
  }
  CHECK_FALSE(prod.has_bottom());
  auto sep = prod.separator({{{0}, {0}}, {{1}, {0}}});
  CHECK_FALSE(prod.prime_kind(sep).principal);

  GridLattice n1 = GridLattice::naturals(1);
  ProductLattice<GridLattice, GridLattice> nprod(n1, n1);
  CHECK(nprod.has_bottom());
  auto nsep = nprod.separator({{{0}, {2}}, {{1}, {2}}});
  auto kind = nprod.prime_kind(nsep);
  CHECK(kind.principal);
  CHECK(kind.generator == std::pair<Tuple, Tuple>{{1}, {0}});
}

TEST_CASE("finite adapter raise and lower agree with filter scans") {
  // divisor lattice of 12
  FiniteAdapter ad(lattice_from_poset(poset_from_covers(
      6, {{0, 1}, {0, 2}, {1, 3}, {1, 4}, {2, 4}, {3, 5}, {4, 5}})));
  const auto& pp = ad.primes();
  for (int x = 0; x < 6; ++x)
    for (int p = 0; p < static_cast<int>(pp.primes.size()); ++p) {
      if (!pp.primes[p].test(x)) {
        int y = ad.raise(x, p);
        CHECK(ad.leq(x, y));
        CHECK(pp.primes[p].test(y));
        for (int z = 0; z < 6; ++z)
          if (ad.leq(x, z) && pp.primes[p].test(z)) CHECK(ad.leq(y, z));
      } else {
        int y = ad.lower(x, p);
        CHECK(ad.leq(y, x));
        CHECK_FALSE(pp.primes[p].test(y));
        for (int z = 0; z < 6; ++z)
          if (ad.leq(z, x) && !pp.primes[p].test(z)) CHECK(ad.leq(z, y));
      }
    }
}
