#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <vector>

#include "latrep/repr.hpp"
#include "latrep/rng.hpp"

using namespace latrep;

namespace {

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

GridIdeal levels(std::vector<GridLevel> ls) { return GridIdeal{std::move(ls)}; }

}  // namespace

TEST_CASE("in_dp fixtures") {
  GridLattice z2 = GridLattice::integers(2);
  GridIdeal anchored = phi_descriptor(z2, {0, 0});
  CHECK(in_dp(z2, anchored, anchored));
  GridIdeal empty = levels({GridLevel::neg_inf(), GridLevel::neg_inf()});
  CHECK_FALSE(in_dp(z2, anchored, empty));
  CHECK(in_dp(z2, empty, empty));
  CHECK(in_dp(z2, anchored, phi_descriptor(z2, {5, -7})));

  BFinLattice b;
  BFinIdeal q1 = BFinIdeal::finite_set({1, 3});
  BFinIdeal q2 = BFinIdeal::finite_set({2});
  CHECK(in_dp(b, q1, q2));
  CHECK(sym_diff_primes(b, q1, q2).size() == 3);
  CHECK_FALSE(in_dp(b, q1, BFinIdeal::cofinite({})));
  CHECK_FALSE(in_dp(b, q1, BFinIdeal::periodic(2, {0})));
  CHECK(in_dp(b, BFinIdeal::periodic(2, {0}), BFinIdeal::periodic(4, {0, 2}, {7})));
  CHECK_FALSE(in_dp(b, BFinIdeal::periodic(2, {0}), BFinIdeal::periodic(4, {0})));
}

TEST_CASE("dp_meet and dp_join on descriptors") {
  GridLattice z2 = GridLattice::integers(2);
  GridIdeal a = phi_descriptor(z2, {1, 0});
  GridIdeal b2 = phi_descriptor(z2, {0, 1});
  CHECK(dp_meet(z2, a, b2) == phi_descriptor(z2, {0, 0}));
  CHECK(dp_join(z2, a, b2) == phi_descriptor(z2, {1, 1}));
  CHECK(dp_meet(z2, a, a) == a);

  BFinLattice b;
  BFinIdeal p1 = BFinIdeal::finite_set({1});
  BFinIdeal p2 = BFinIdeal::finite_set({2});
  CHECK(dp_join(b, p1, p2) == BFinIdeal::finite_set({1, 2}));
  CHECK(dp_join(b, p1, p2) == phi_descriptor(b, {1, 2}));
  CHECK(dp_meet(b, p1, p2) == BFinIdeal::finite_set({}));

  // cofinite and periodic classes stay inside their class
  BFinIdeal c1 = BFinIdeal::cofinite({0, 2});
  BFinIdeal c2 = BFinIdeal::cofinite({2, 5});
  BFinIdeal cm = dp_meet(b, c1, c2);
  BFinIdeal cj = dp_join(b, c1, c2);
  CHECK(cm == BFinIdeal::cofinite({0, 2, 5}));
  CHECK(cj == BFinIdeal::cofinite({2}));
  for (Coord k = 0; k < 10; ++k) {
    CHECK(cm.member(k) == (c1.member(k) && c2.member(k)));
    CHECK(cj.member(k) == (c1.member(k) || c2.member(k)));
  }

  BFinIdeal e1 = BFinIdeal::periodic(2, {0}, {0, 3});
  BFinIdeal e2 = BFinIdeal::periodic(2, {0}, {4});
  BFinIdeal em = dp_meet(b, e1, e2);
  for (Coord k = 0; k < 16; ++k) REQUIRE(em.member(k) == (e1.member(k) && e2.member(k)));
  CHECK(in_dp(b, em, e1));
}

TEST_CASE("phi is a homomorphism onto descriptors") {
  Rng rng(161);
  GridLattice z2 = GridLattice::integers(2);
  BFinLattice b;
  for (int t = 0; t < 100; ++t) {
    Tuple x = random_point(rng, 2, -6, 6), y = random_point(rng, 2, -6, 6);
    CHECK(dp_meet(z2, phi_descriptor(z2, x), phi_descriptor(z2, y)) ==
          phi_descriptor(z2, z2.meet(x, y)));
    CHECK(dp_join(z2, phi_descriptor(z2, x), phi_descriptor(z2, y)) ==
          phi_descriptor(z2, z2.join(x, y)));

    Tuple s = random_subset(rng, 8), u = random_subset(rng, 8);
    CHECK(dp_meet(b, phi_descriptor(b, s), phi_descriptor(b, u)) ==
          phi_descriptor(b, b.meet(s, u)));
    CHECK(dp_join(b, phi_descriptor(b, s), phi_descriptor(b, u)) ==
          phi_descriptor(b, b.join(s, u)));
  }
}

TEST_CASE("apply_delta folds toggles into levels") {
  GridLattice z2 = GridLattice::integers(2);
  GridIdeal base = phi_descriptor(z2, {0, 0});
  GridIdeal q = apply_delta(z2, base, {{0, 1}, {0, 2}, {1, 1}});
  CHECK(q == phi_descriptor(z2, {2, 1}));
  CHECK(apply_delta(z2, base, {{0, 0}}) == phi_descriptor(z2, {-1, 0}));
  CHECK_THROWS_AS(apply_delta(z2, base, {{0, 2}}), NotAnIdeal);          // gap above
  CHECK_THROWS_AS(apply_delta(z2, base, {{0, -1}}), NotAnIdeal);         // interior removal
  GridIdeal full0 = levels({GridLevel::pos_inf(), GridLevel::finite(0)});
  CHECK_THROWS_AS(apply_delta(z2, full0, {{0, 3}}), NotAnIdeal);

  GridLattice n1 = GridLattice::naturals(1);
  CHECK(apply_delta(n1, levels({GridLevel::finite(0)}), {{0, 1}, {0, 2}}) ==
        levels({GridLevel::finite(2)}));

  BFinLattice b;
  CHECK(apply_delta(b, BFinIdeal::finite_set({1}), {{3}, {1}}) == BFinIdeal::finite_set({3}));
}

TEST_CASE("inverse_phi fixtures") {
  GridLattice z2 = GridLattice::integers(2);
  auto same = inverse_phi(z2, {3, -2}, phi_descriptor(z2, {3, -2}));
  CHECK(same.value == Tuple{3, -2});
  CHECK(same.steps == 0);

  GridIdeal q = apply_delta(z2, phi_descriptor(z2, {0, 0}), {{0, 1}, {0, 2}, {1, 1}});
  auto r = inverse_phi(z2, {0, 0}, q);
  CHECK(r.value == Tuple{2, 1});
  CHECK(r.steps == 3);

  BFinLattice b;
  auto rb = inverse_phi(b, {}, BFinIdeal::finite_set({2, 7}));
  CHECK(rb.value == Tuple{2, 7});
  CHECK(rb.steps == 2);

  CHECK_THROWS_AS(inverse_phi(b, {}, BFinIdeal::cofinite({})), NotAnIdeal);
  CHECK_THROWS_AS(
      inverse_phi(z2, {0, 0}, levels({GridLevel::pos_inf(), GridLevel::finite(0)})), NotAnIdeal);
}

TEST_CASE("phi and inverse_phi round-trip with one cover move per step") {
  Rng rng(271828);
  GridLattice z2 = GridLattice::integers(2);
  GridLattice z3 = GridLattice::integers(3);
  BFinLattice b;
  for (int t = 0; t < 120; ++t) {
    Tuple x0 = random_point(rng, 2, -6, 6), x = random_point(rng, 2, -6, 6);
    auto r = inverse_phi(z2, x0, phi_descriptor(z2, x));
    REQUIRE(r.value == x);
    REQUIRE(r.steps == static_cast<int>(sym_diff_primes(z2, phi_descriptor(z2, x0),
                                                        phi_descriptor(z2, x)).size()));

    Tuple y0 = random_point(rng, 3, -4, 4), y = random_point(rng, 3, -4, 4);
    REQUIRE(inverse_phi(z3, y0, phi_descriptor(z3, y)).value == y);

    Tuple s0 = random_subset(rng, 9), s = random_subset(rng, 9);
    auto rb = inverse_phi(b, s0, phi_descriptor(b, s));
    REQUIRE(rb.value == s);
    REQUIRE(rb.steps == static_cast<int>(sym_diff_primes(b, phi_descriptor(b, s0),
                                                         phi_descriptor(b, s)).size()));
  }
  // random descriptors back through phi
  for (int t = 0; t < 120; ++t) {
    GridIdeal q = phi_descriptor(z2, random_point(rng, 2, -6, 6));
    REQUIRE(phi_descriptor(z2, inverse_phi(z2, random_point(rng, 2, -6, 6), q).value) == q);
    BFinIdeal qb = phi_descriptor(b, random_subset(rng, 9));
    REQUIRE(phi_descriptor(b, inverse_phi(b, random_subset(rng, 9), qb).value) == qb);
  }
}

TEST_CASE("rank and symmetric difference agree through the meet") {
  Rng rng(314159);
  GridLattice z2 = GridLattice::integers(2);
  BFinLattice b;
  for (int t = 0; t < 100; ++t) {
    Tuple x = random_point(rng, 2, -6, 6), y = random_point(rng, 2, -6, 6);
    Tuple m = z2.meet(x, y);
    auto diff = sym_diff_primes(z2, phi_descriptor(z2, x), phi_descriptor(z2, y));
    REQUIRE(static_cast<Coord>(diff.size()) ==
            rank_diff(z2, m, x) + rank_diff(z2, m, y));

    Tuple s = random_subset(rng, 8), u = random_subset(rng, 8);
    Tuple sm = b.meet(s, u);
    auto bdiff = sym_diff_primes(b, phi_descriptor(b, s), phi_descriptor(b, u));
    REQUIRE(static_cast<Coord>(bdiff.size()) ==
            rank_diff(b, sm, s) + rank_diff(b, sm, u));
  }
}

TEST_CASE("dp results stay in class and sandwiched ideals stay in_dp") {
  Rng rng(123321);
  GridLattice z2 = GridLattice::integers(2);
  for (int t = 0; t < 60; ++t) {
    GridIdeal q1 = phi_descriptor(z2, random_point(rng, 2, -4, 4));
    GridIdeal q2 = phi_descriptor(z2, random_point(rng, 2, -4, 4));
    GridIdeal lo = dp_meet(z2, q1, q2), hi = dp_join(z2, q1, q2);
    REQUIRE(in_dp(z2, lo, q1));
    REQUIRE(in_dp(z2, hi, q1));
    // convexity at a finite truncation: every level vector between lo and hi
    for (Coord a = lo.levels[0].value; a <= hi.levels[0].value; ++a)
      for (Coord bb = lo.levels[1].value; bb <= hi.levels[1].value; ++bb) {
        GridIdeal r = levels({GridLevel::finite(a), GridLevel::finite(bb)});
        REQUIRE(in_dp(z2, r, q1));
      }
  }
}

TEST_CASE("components_finite fixtures") {
  ComponentReport a3 = components_finite(poset_from_covers(3, {}));
  REQUIRE(a3.finite_class_count == 1);
  CHECK(a3.classes[0].size == 8);

  ComponentReport c4 = components_finite(poset_from_covers(4, {{0, 1}, {1, 2}, {2, 3}}));
  REQUIRE(c4.finite_class_count == 1);
  CHECK(c4.classes[0].size == 5);
}

TEST_CASE("ideal graph edges are exactly the cover pairs of the ideal lattice") {
  Rng rng(44203);
  for (int t = 0; t < 30; ++t) {
    int n = 1 + rng.below(5);
    std::vector<CoverPair> cov;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        if (rng.chance(1, 3)) cov.emplace_back(i, j);
    Poset p = poset_from_covers(n, cov);
    auto edges = one_step_edges(order_ideals(p));
    FiniteLattice il = ideal_lattice(p);
    std::vector<std::pair<int, int>> covers = il.poset().covers();
    std::sort(edges.begin(), edges.end());
    std::sort(covers.begin(), covers.end());
    REQUIRE(edges == covers);
  }
}

TEST_CASE("components_symbolic for grids") {
  GridLattice z2 = GridLattice::integers(2);
  ComponentReport r = components_symbolic(z2);
  REQUIRE(r.classes.size() == 9);
  CHECK(r.finite_class_count == 9);
  int central = -1;
  for (int i = 0; i < 9; ++i)
    if (r.classes[i].phi_image) {
      REQUIRE(central < 0);
      central = i;
    }
  REQUIRE(central >= 0);
  CHECK(r.classes[central].iso_type == "ℤ×ℤ");
  CHECK(r.classes[central].label == "(fin,fin)");

  ComponentReport r1 = components_symbolic(GridLattice::integers(1));
  REQUIRE(r1.classes.size() == 3);
  CHECK(r1.classes[0].label == "(-inf)");
  CHECK(r1.classes[0].iso_type == "point");
  CHECK(r1.classes[1].iso_type == "ℤ");
  CHECK(r1.classes[2].label == "(+inf)");

  ComponentReport rn = components_symbolic(GridLattice::naturals(2));
  REQUIRE(rn.classes.size() == 4);
  CHECK(rn.classes[0].iso_type == "ℕ×ℕ");
  CHECK(rn.classes[0].phi_image);
}

TEST_CASE("components_symbolic for bfin") {
  ComponentReport r = components_symbolic(BFinLattice{});
  REQUIRE(r.classes.size() == 3);
  CHECK(r.classes[0].label == "bottom");
  CHECK(r.classes[0].iso_type == "𝔹_fin");
  CHECK(r.classes[0].phi_image);
  CHECK(r.classes[1].label == "top");
  CHECK(r.classes[1].iso_type == "𝔹_cofin");
  CHECK(r.classes[2].label == "middle");
  CHECK(r.classes[2].iso_type == "𝔹_fin × 𝔹_cofin");
  CHECK(r.finite_class_count == 2);
  REQUIRE(r.unbounded_note.has_value());
}

TEST_CASE("component labels classify descriptors") {
  GridLattice z2 = GridLattice::integers(2);
  CHECK(component_label(z2, phi_descriptor(z2, {4, -9})) == "(fin,fin)");
  CHECK(component_label(z2, GridIdeal{{GridLevel::neg_inf(), GridLevel::pos_inf()}}) ==
        "(-inf,+inf)");
  BFinLattice b;
  CHECK(component_label(b, BFinIdeal::finite_set({1})) == "bottom");
  CHECK(component_label(b, BFinIdeal::cofinite({9})) == "top");
  CHECK(component_label(b, BFinIdeal::periodic(3, {1})) == "middle");
}

TEST_CASE("conjecture probe reports widths and component counts") {
  GridLattice z2 = GridLattice::integers(2);
  ProbeReport r = conjecture_probe(z2, {1, 2, 3});
  REQUIRE(r.windows.size() == 3);
  CHECK(r.windows[0].lattice_width == 3);   // 3x3 window, antidiagonal
  CHECK(r.windows[2].lattice_width == 7);   // 7x7 window
  for (const auto& w : r.windows) CHECK(w.prime_width == 2);
  CHECK(r.component_classes == 9);

  BFinLattice b;
  ProbeReport rb = conjecture_probe(b, {2, 4});
  CHECK(rb.windows[0].lattice_width == 2);  // B2
  CHECK(rb.windows[1].lattice_width == 6);  // B4 central binomial
  CHECK(rb.windows[0].prime_width == 2);
  CHECK(rb.windows[1].prime_width == 4);
  REQUIRE(rb.component_note.has_value());

  FiniteAdapter ad(ideal_lattice(poset_from_covers(3, {})));
  ProbeReport ra = conjecture_probe(ad, {});
  CHECK(ra.component_classes == 1);
  CHECK(ra.windows[0].lattice_width == 3);
  CHECK(ra.windows[0].prime_width == 3);
}
