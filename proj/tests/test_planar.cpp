#include <algorithm>
#include <random>
#include <set>

#include "doctest.h"
#include "kirbykit/error.hpp"
#include "kirbykit/planar.hpp"

using namespace kirbykit;
using namespace kirbykit::planar;

namespace {

PlanarData figure_eight_pd() {
  PlanarData pd;
  pd.lines.push_back(PDLine{"k", {{{4, 2, 5, 1}, 1}, {{8, 6, 1, 5}, 1}, {{6, 3, 7, 4}, -1}, {{2, 7, 3, 8}, -1}}});
  return pd;
}

PlanarData hopf_pd() {
  PlanarData pd;
  pd.lines.push_back(PDLine{"a", {{{1, 3, 2, 4}, 1}}});
  pd.lines.push_back(PDLine{"b", {{{3, 1, 4, 2}, 1}}});
  return pd;
}

// Reverses the orientation of one component by relabelling its arcs in reverse
// order and rewriting every crossing it touches.
PlanarData reverse_component(const PlanarData& pd, const std::string& id) {
  const Graph g = build_graph(pd);
  // graph edge ids are the arc labels in increasing order
  std::set<long> all;
  for (const auto& l : pd.lines)
    for (const auto& x : l.crossings) all.insert(x.arcs.begin(), x.arcs.end());
  const auto& ids = g.component_ids();
  const int target = static_cast<int>(std::find(ids.begin(), ids.end(), id) - ids.begin());
  std::set<long> labels;
  int e = 0;
  for (long a : all)
    if (g.component_of(e++) == target) labels.insert(a);
  std::vector<long> sorted(labels.begin(), labels.end());
  std::map<long, long> relabel;
  for (std::size_t i = 0; i < sorted.size(); ++i) relabel[sorted[i]] = sorted[sorted.size() - 1 - i];
  auto mapped = [&](long a) { return relabel.count(a) ? relabel[a] : a; };

  PlanarData out = pd;
  for (auto& l : out.lines)
    for (auto& x : l.crossings) {
      const bool under_rev = l.component == id;
      const bool over_rev = labels.count(x.arcs[1]) > 0;
      std::array<long, 4> a{mapped(x.arcs[0]), mapped(x.arcs[1]), mapped(x.arcs[2]), mapped(x.arcs[3])};
      if (under_rev) a = {a[2], a[3], a[0], a[1]};
      x.arcs = a;
      if (under_rev != over_rev) x.sign = -x.sign;
    }
  return out;
}

bool is_knot(const Braid& b) {
  std::vector<int> perm(static_cast<std::size_t>(b.strands));
  for (int i = 0; i < b.strands; ++i) perm[static_cast<std::size_t>(i)] = i;
  for (int g : b.word) std::swap(perm[static_cast<std::size_t>(std::abs(g) - 1)], perm[static_cast<std::size_t>(std::abs(g))]);
  int x = 0, len = 0;
  do {
    x = perm[static_cast<std::size_t>(x)];
    ++len;
  } while (x != 0);
  return len == b.strands;
}

}  // namespace

TEST_CASE("hopf link linking number from crossings") {
  const Graph g = build_graph(hopf_pd());
  CHECK(crossing_linking(g).at({0, 1}) == 1);
  const Graph r = build_graph(reverse_component(hopf_pd(), "b"));
  CHECK(crossing_linking(r).at({0, 1}) == -1);
  const Graph braid_hopf = braid_closure(Braid{2, {-1, -1}}, "h");
  CHECK(crossing_linking(braid_hopf).at({0, 1}) == -1);
}

TEST_CASE("malformed PD codes are rejected") {
  PlanarData bad = hopf_pd();
  bad.lines[0].crossings[0].sign = -1;
  CHECK_THROWS_AS(build_graph(bad), ParseError);
  PlanarData repeated = hopf_pd();
  repeated.lines[1].crossings[0].arcs[0] = 1;
  CHECK_THROWS_AS(build_graph(repeated), ParseError);
  PlanarData wrong_under = figure_eight_pd();
  std::swap(wrong_under.lines[0].crossings[0].arcs[0], wrong_under.lines[0].crossings[0].arcs[2]);
  CHECK_THROWS_AS(build_graph(wrong_under), ParseError);
}

TEST_CASE("trefoil from a braid: Seifert matrix, Fox oracle, signature") {
  const Graph k = braid_closure(Braid{2, {1, 1, 1}}, "k");
  CHECK(k.crossings().size() == 3);
  for (const auto& x : k.crossings()) CHECK(x.sign == 1);
  const IntMatrix v = seifert_matrix(k);
  CHECK(abs(determinant(v - v.transposed())) == 1);
  CHECK(alexander_from_seifert(v).to_string() == "t^-1 - 1 + t");
  CHECK(fox_alexander(k).to_string() == "t^-1 - 1 + t");
  CHECK(signature(v + v.transposed()) == -2);
  // hand oracle for the right-handed trefoil
  CHECK(alexander_from_seifert(IntMatrix{{-1, 1}, {0, -1}}) == alexander_from_seifert(v));
}

TEST_CASE("figure-eight PD: Vogel moves, Seifert route and Fox route agree") {
  const Graph k = build_graph(figure_eight_pd());
  const IntMatrix v = seifert_matrix(k);
  CHECK(abs(determinant(v - v.transposed())) == 1);
  CHECK(alexander_from_seifert(v).to_string() == "t^-1 - 3 + t");
  CHECK(fox_alexander(k).to_string() == "t^-1 - 3 + t");
  CHECK(signature(v + v.transposed()) == 0);
  CHECK(alexander_from_seifert(IntMatrix{{-1, 1}, {0, 1}}) == alexander_from_seifert(v));
  // reversing a knot leaves Δ unchanged
  CHECK(fox_alexander(build_graph(reverse_component(figure_eight_pd(), "k"))) == fox_alexander(k));
}

TEST_CASE("unknot diagrams give an empty Seifert matrix") {
  CHECK(seifert_matrix(braid_closure(Braid{1, {}}, "u")).rows() == 0);
  CHECK(seifert_matrix(braid_closure(Braid{2, {1}}, "u")).rows() == 0);
  CHECK(alexander_from_seifert(IntMatrix(0, 0)) == LaurentPoly(1));
}

TEST_CASE("planar data round trip preserves the knot") {
  const Graph k = braid_closure(Braid{3, {1, -2, 1, -2}}, "k");
  const Graph again = build_graph(to_planar_data(k));
  CHECK(again.crossings().size() == k.crossings().size());
  CHECK(fox_alexander(again) == fox_alexander(k));
  CHECK(fox_alexander(k).to_string() == "t^-1 - 3 + t");
}

TEST_CASE("random braid knots: Seifert and Fox routes agree") {
  std::mt19937 rng(17);
  int tested = 0;
  while (tested < 60) {
    const int strands = 2 + static_cast<int>(rng() % 3);
    const std::size_t len = 1 + rng() % 9;
    Braid b{strands, {}};
    for (std::size_t i = 0; i < len; ++i) {
      const int g = 1 + static_cast<int>(rng() % static_cast<unsigned>(strands - 1));
      b.word.push_back(rng() % 2 ? g : -g);
    }
    if (!is_knot(b)) continue;
    ++tested;
    const Graph k = braid_closure(b, "k");
    const Graph scrambled = build_graph(to_planar_data(k));
    const IntMatrix v = seifert_matrix(scrambled);
    CHECK(abs(determinant(v - v.transposed())) == 1);
    CHECK(alexander_from_seifert(v) == fox_alexander(k));
    CHECK(alexander_from_seifert(braid_seifert_matrix(b)) == fox_alexander(k));
    CHECK(signature(v + v.transposed()) == signature(braid_seifert_matrix(b) + braid_seifert_matrix(b).transposed()));
  }
}

TEST_CASE("random plat knots need Vogel moves; both routes still agree") {
  std::mt19937 rng(23);
  int tested = 0;
  for (int trial = 0; trial < 400 && tested < 40; ++trial) {
    const int strands = 2 * (1 + static_cast<int>(rng() % 3));
    const std::size_t len = rng() % 8;
    std::vector<StrandCrossing> xs;
    for (std::size_t i = 0; i < len && strands > 1; ++i)
      xs.push_back(StrandCrossing{static_cast<int>(rng() % static_cast<unsigned>(strands - 1)), rng() % 2 == 0});
    const Graph g = build_strand_diagram(strands, xs, Closure::plat, "k");
    if (g.component_ids().size() != 1) continue;
    ++tested;
    const IntMatrix v = seifert_matrix(g);
    CHECK(abs(determinant(v - v.transposed())) == 1);
    CHECK(alexander_from_seifert(v) == fox_alexander(g));
  }
  CHECK(tested >= 20);
}

TEST_CASE("extracting one component of a link") {
  // trefoil-like component 1 plus a meridian: braid on 3 strands
  const Graph link = braid_closure(Braid{3, {1, 1, 1, 2, 2}}, "c");
  REQUIRE(link.component_ids().size() == 2);
  const auto& ids = link.component_ids();
  for (const auto& id : ids) {
    const Graph k = extract_knot(link, id);
    CHECK(fox_alexander(k) == alexander_from_seifert(seifert_matrix(k)));
  }
}
