#include "doctest.h"
#include "kirbykit/error.hpp"
#include "kirbykit/invariants.hpp"
#include "kirbykit/moves.hpp"
#include "kirbykit/planar.hpp"
#include "support.hpp"

using namespace kirbykit;
using namespace testsupport;

namespace {

Diagram mazur(long f, long l = 1) {
  Diagram d;
  d.add_component(Component::dotted_circle("u"));
  d.add_component(Component::framed_knot("h", f), {l});
  return d;
}

Diagram lone(long f) {
  Diagram d;
  d.add_component(Component::framed_knot("k", f, true));
  return d;
}

// det(V - t Vᵀ) for a 2×2 Seifert matrix, expanded by hand.
LaurentPoly two_by_two_alexander(long a, long b, long c, long e) {
  const LaurentPoly t = LaurentPoly::t();
  const LaurentPoly m00 = LaurentPoly(a) - t * LaurentPoly(a);
  const LaurentPoly m01 = LaurentPoly(b) - t * LaurentPoly(c);
  const LaurentPoly m10 = LaurentPoly(c) - t * LaurentPoly(b);
  const LaurentPoly m11 = LaurentPoly(e) - t * LaurentPoly(e);
  return m00 * m11 - m01 * m10;
}

Diagram with_planar(const planar::Graph& g, const std::string& id) {
  Diagram d;
  d.add_component(Component::framed_knot(id, 0));
  d.set_planar(planar::to_planar_data(g));
  return d;
}

}  // namespace

TEST_CASE("homology of small diagrams") {
  CHECK(h1_manifold(mazur(0)).trivial());
  CHECK(h1_manifold(mazur(0, 0)) == AbelianGroup{1, {}});
  CHECK(h1_manifold(lone(3)).trivial());
  CHECK(h1_boundary(lone(0)) == AbelianGroup{1, {}});
  CHECK(h1_boundary(lone(5)) == AbelianGroup{0, {5}});
  CHECK(h1_manifold(mazur(0, 3)) == AbelianGroup{0, {3}});
  for (long f = -5; f <= 5; ++f) {
    CHECK(h1_boundary(mazur(f)).trivial());
    CHECK(is_homology_sphere_boundary(mazur(f)));
    CHECK(is_homology_ball(mazur(f)));
    CHECK(euler_characteristic(mazur(f)) == 1);
  }
  CHECK(is_homology_sphere_boundary(lone(1)));
  CHECK_FALSE(is_homology_ball(lone(1)));
  CHECK(euler_characteristic(lone(1)) == 2);
  CHECK_FALSE(is_homology_sphere_boundary(lone(0)));
  CHECK_FALSE(is_homology_ball(lone(0)));
  CHECK(euler_characteristic(Diagram{}) == 1);
  CHECK(signature(Diagram{}) == 0);
  CHECK(is_homology_ball(Diagram{}));

  Diagram three = mazur(-1);
  three.set_three_handles(1);
  CHECK(handle_counts(three) == HandleCounts{1, 1, 1, 1});
  CHECK(euler_characteristic(three) == 0);
}

TEST_CASE("signature under split blow-ups and random moves") {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 100; ++trial) {
    const Diagram d = random_diagram(rng);
    CHECK(signature(blow_up(d, 1, {})) == signature(d) + 1);
    CHECK(signature(blow_up(d, -1, {})) == signature(d) - 1);
    const Diagram e = blow_up(d, 1, random_framed_mult(rng, d));
    CHECK(h1_boundary(e) == h1_boundary(d));
    CHECK(euler_characteristic(blow_down(e, e.component(e.size() - 1).id)) == euler_characteristic(d));
  }
}

TEST_CASE("Alexander polynomials: trefoil, figure-eight, unknot") {
  const Diagram trefoil = with_planar(planar::braid_closure(planar::Braid{2, {1, 1, 1}}, "k"), "k");
  const LaurentPoly tre = LaurentPoly::from_coefficients(-1, {1, -1, 1});
  CHECK(alexander(trefoil, "k") == tre);
  CHECK(alexander_fox_oracle(trefoil, "k") == tre);
  CHECK(normalize_symmetric(two_by_two_alexander(-1, 1, 0, -1)) == tre);

  const Diagram fig8 = twist_knot(1);
  CHECK(alexander(fig8, "k") == LaurentPoly::from_coefficients(-1, {1, -3, 1}));
  CHECK(alexander_fox_oracle(fig8, "k") == alexander(fig8, "k"));

  const Diagram unknot = parse_diagram("component k framed 0\npd k\n");
  CHECK(alexander(unknot, "k") == LaurentPoly(1));
  CHECK(alexander_fox_oracle(unknot, "k") == LaurentPoly(1));

  CHECK_THROWS_AS(alexander(lone(0), "k"), PreconditionError);
  const Diagram stale = twist_region(trefoil, 1, {{"k", 1}});
  CHECK_THROWS_AS(alexander(stale, "k"), PreconditionError);
  CHECK_THROWS_AS(alexander(trefoil, "zz"), PreconditionError);
}

TEST_CASE("twist knots match the Seifert oracle and each other pairwise differ") {
  std::vector<LaurentPoly> seen;
  for (int n = 1; n <= 25; ++n) {
    const Diagram k = twist_knot(n);
    const LaurentPoly delta = alexander(k, "k");
    CHECK(delta == alexander_fox_oracle(k, "k"));
    CHECK(delta == normalize_symmetric(two_by_two_alexander(-1, 1, 0, n)));
    CHECK(delta.to_string() == LaurentPoly::from_coefficients(-1, {n, -(2 * n + 1), n}).to_string());
    CHECK(abs(delta.evaluate(-1)) == 4 * n + 1);
    for (const auto& earlier : seen) CHECK_FALSE(earlier == delta);
    seen.push_back(delta);
  }
  CHECK(alexander(twist_knot(2), "k").to_string() == "2*t^-1 - 5 + 2*t");
  CHECK_THROWS_AS(twist_knot(0), PreconditionError);
}

TEST_CASE("formal Seiberg-Witten distinguisher") {
  for (int n = 1; n <= 10; ++n) {
    const LaurentPoly dn = alexander(twist_knot(n), "k");
    CHECK(knot_surgery_sw(1, dn) == dn);
    CHECK(knot_surgery_sw(0, dn).is_zero());
  }
  const LaurentPoly sw = LaurentPoly::from_coefficients(-1, {1, 0, 1});
  for (int n = 1; n <= 10; ++n)
    for (int m = n + 1; m <= 10; ++m) {
      const auto a = knot_surgery_sw(sw, alexander(twist_knot(n), "k"));
      const auto b = knot_surgery_sw(sw, alexander(twist_knot(m), "k"));
      CHECK_FALSE(a == b);
    }
  CHECK(distinguish_sn(1, 2, 1) == Verdict::distinct);
  CHECK(distinguish_sn(3, 3, 1) == Verdict::inconclusive);
  CHECK(distinguish_sn(1, 2, 0) == Verdict::inconclusive);
  CHECK_THROWS_AS(distinguish_sn(0, 2, 1), PreconditionError);
}

TEST_CASE("cork twists with matched strands preserve the invariants") {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 100; ++trial) {
    const Diagram d = random_diagram(rng, 6);
    std::vector<std::string> h;
    for (const auto& c : d.components())
      if (uniform(rng, 0, 1)) h.push_back(c.id);
    DeltaData delta;
    delta.unknot = true;
    delta.c_plus = random_framed_mult(rng, d);
    delta.c_minus = delta.c_plus;
    const int n = static_cast<int>(uniform(rng, 0, 4));
    const auto r = cork_twist(d, h, delta, n);
    CHECK(h1_boundary(r.diagram) == h1_boundary(d));
    CHECK(euler_characteristic(r.diagram) == euler_characteristic(d));
    CHECK(signature(r.diagram) == signature(d));
  }
}

TEST_CASE("twist knot Seifert matrices are symplectically unimodular up to n = 50") {
  for (int n = 1; n <= 50; ++n) {
    const Diagram k = twist_knot(n);
    const planar::Graph g = planar::extract_knot(planar::build_graph(*k.planar()), "k");
    CHECK(g.crossings().size() == static_cast<std::size_t>(n == 1 ? 4 : 3 * n + 1));
    const IntMatrix v = planar::seifert_matrix(g);
    const Integer det = determinant(v - v.transposed());
    CHECK((det == 1 || det == -1));
    CHECK(signature(v + v.transposed()) == 0);
  }
}

TEST_CASE("3-handles cap off free summands of the boundary") {
  std::mt19937_64 rng(29);
  for (int trial = 0; trial < 200; ++trial) {
    const Diagram d = random_diagram(rng);
    const Diagram added = add_23_pair(d, "delta");
    CHECK(h1_boundary(added) == h1_boundary(d));
    CHECK(cancel_23(added, "delta") == d);
    CHECK(euler_characteristic(added) == euler_characteristic(d));
    CHECK(signature(added) == signature(d));
  }
  Diagram h;
  h.add_component(Component::framed_knot("a", -1));
  h.add_component(Component::framed_knot("b", -1));
  h.add_component(Component::framed_knot("c", 0));
  h.set_three_handles(1);
  CHECK(h1_boundary(h).trivial());
  CHECK(is_homology_sphere_boundary(h));
  h.set_three_handles(2);
  CHECK_THROWS_AS(h1_boundary(h), PreconditionError);
}
