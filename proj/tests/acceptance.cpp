// Acceptance runner: one PASS/FAIL line per criterion. Tolerances and time
// limits are pinned below; every check is exact.

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>

#include "kirbykit/error.hpp"
#include "kirbykit/invariants.hpp"
#include "kirbykit/lemma2.hpp"
#include "kirbykit/monodromy.hpp"
#include "kirbykit/moves.hpp"
#include "kirbykit/planar.hpp"
#include "support.hpp"

using namespace kirbykit;
using namespace testsupport;

namespace {

// Wall-clock limits in milliseconds.
constexpr double kMonodromyIdentityMs = 1;
constexpr double kCentralizerMs = 5000;
constexpr double kOrderMs = 1;
constexpr double kTorusH1Ms = 1;
constexpr double kAlexanderSweepMs = 30000;
constexpr double kMoveSuiteMs = 60000;
constexpr double kLemma2Ms = 10000;
constexpr double kNoLimit = 0;

constexpr int kRandomDiagrams = 1000;
constexpr int kTwistKnotMax = 25;
constexpr long kBruteBound = 25;

struct Outcome {
  bool ok = true;
  std::string detail;
  // Time limits apply to this span when set, otherwise to the whole criterion.
  double timed_ms = -1;

  void require(bool cond, const std::string& what) {
    if (cond || !ok) {
      if (!cond) ok = false;
      return;
    }
    ok = false;
    detail = what;
  }
};

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

int failures = 0;

void run(int id, const std::string& title, double limit_ms, const std::function<Outcome()>& body) {
  const auto t0 = Clock::now();
  Outcome o;
  try {
    o = body();
  } catch (const std::exception& e) {
    o.ok = false;
    o.detail = std::string("exception: ") + e.what();
  }
  const double total = ms_since(t0);
  const double timed = o.timed_ms >= 0 ? o.timed_ms : total;
  bool ok = o.ok;
  std::ostringstream line;
  line << "criterion " << id << (ok && (limit_ms <= 0 || timed <= limit_ms) ? " PASS  " : " FAIL  ") << title;
  char buf[96];
  if (limit_ms > 0)
    std::snprintf(buf, sizeof buf, "  [%.3f ms, limit %.0f ms]", timed, limit_ms);
  else
    std::snprintf(buf, sizeof buf, "  [%.3f ms]", timed);
  line << buf;
  if (limit_ms > 0 && timed > limit_ms) {
    ok = false;
    if (o.detail.empty()) o.detail = "time limit exceeded";
  }
  if (!o.detail.empty()) line << "  -- " << o.detail;
  if (!ok) ++failures;
  std::cout << line.str() << std::endl;
}

const SL2Mat kA{-1, -2, 1, 1};

LaurentPoly expected_twist(long n) {
  return LaurentPoly::monomial(n, -1) + LaurentPoly(-(2 * n + 1)) + LaurentPoly::monomial(n, 1);
}

Diagram knot_from(const planar::Graph& g) {
  Diagram d;
  d.add_component(Component::framed_knot("k", 0));
  d.set_planar(planar::to_planar_data(g));
  return d;
}

Outcome monodromy_identity() {
  Outcome o;
  const auto t0 = Clock::now();
  const SL2Mat a = generator_a(), b = generator_b();
  const SL2Mat product = a * a * b;
  const SL2Mat word = evaluate("aab");
  o.timed_ms = ms_since(t0);
  o.require(a == (SL2Mat{1, -1, 0, 1}) && b == (SL2Mat{1, 0, 1, 1}), "generators differ from [[1,-1],[0,1]], [[1,0],[1,1]]");
  o.require(product == kA, "a·a·b = " + product.to_string());
  o.require(word == kA, "evaluate(aab) = " + word.to_string());
  return o;
}

Outcome centralizer_check() {
  Outcome o;
  const std::set<SL2Mat> expected{SL2Mat{}, -SL2Mat{}, kA, -kA};
  const Centralizer c = centralizer(kA);
  const auto structural = c.in_box(kBruteBound);
  const auto brute = centralizer_bruteforce(kA, kBruteBound);
  o.require(std::set<SL2Mat>(structural.begin(), structural.end()) == expected && structural.size() == 4,
            "structural solver: " + c.describe());
  o.require(std::set<SL2Mat>(brute.begin(), brute.end()) == expected && brute.size() == 4,
            "brute force found " + std::to_string(brute.size()) + " matrices");
  o.require(c.kind == Centralizer::Kind::finite && c.elements.size() == 4, "centralizer is not the finite group of order 4");
  return o;
}

Outcome order_check() {
  Outcome o;
  const auto t0 = Clock::now();
  const SL2Mat sq = kA * kA;
  const OrderAndClass oc = order_and_class(kA);
  o.timed_ms = ms_since(t0);
  o.require(sq == -SL2Mat{}, "A² = " + sq.to_string());
  o.require(oc.order && *oc.order == 4, "order is not 4");
  o.require(sq * sq == SL2Mat{}, "A⁴ ≠ I");
  return o;
}

Outcome torus_h1_check() {
  Outcome o;
  const auto t0 = Clock::now();
  IntMatrix m = kA.to_matrix();
  m(0, 0) -= 1;
  m(1, 1) -= 1;
  const auto factors = smith_normal_form(m).invariant_factors();
  const AbelianGroup h1 = torus_bundle_h1(kA);
  o.timed_ms = ms_since(t0);
  o.require(factors == std::vector<Integer>{1, 2}, "SNF(A − I) is not diag(1,2)");
  o.require(h1.free_rank == 1 && h1.torsion == std::vector<Integer>{2}, "H₁ = " + h1.to_string());
  return o;
}

Outcome twist_knot_sweep() {
  Outcome o;
  std::vector<LaurentPoly> polys;
  for (int n = 1; n <= kTwistKnotMax; ++n) {
    const Diagram k = twist_knot(n);
    const LaurentPoly s = alexander(k, "k");
    const LaurentPoly f = alexander_fox_oracle(k, "k");
    o.require(s == expected_twist(n), "Seifert route, n = " + std::to_string(n) + ": " + s.to_string());
    o.require(f == expected_twist(n), "Fox route, n = " + std::to_string(n) + ": " + f.to_string());
    polys.push_back(s);
  }
  int pairs = 0;
  for (int n = 1; n <= kTwistKnotMax; ++n)
    for (int m = n + 1; m <= kTwistKnotMax; ++m) {
      ++pairs;
      o.require(!(polys[n - 1] == polys[m - 1]), "K_" + std::to_string(n) + " and K_" + std::to_string(m) + " agree");
      o.require(distinguish_sn(n, m, FormalSW(1)) == Verdict::distinct,
                "distinguish_sn inconclusive for " + std::to_string(n) + ", " + std::to_string(m));
    }
  o.require(pairs == 300, "expected 300 pairs");
  if (o.ok) o.detail = "n = 1.." + std::to_string(kTwistKnotMax) + ", " + std::to_string(pairs) + " pairs distinct";
  return o;
}

Outcome small_knots() {
  Outcome o;
  const LaurentPoly t = LaurentPoly::t(), ti = LaurentPoly::monomial(1, -1);
  struct Case {
    const char* name;
    Diagram d;
    LaurentPoly expected;
  };
  const Case cases[] = {
      {"trefoil", knot_from(planar::braid_closure(planar::Braid{2, {1, 1, 1}}, "k")), t - LaurentPoly(1) + ti},
      {"figure-eight", knot_from(planar::braid_closure(planar::Braid{3, {1, -2, 1, -2}}, "k")), t - LaurentPoly(3) + ti},
      {"unknot", parse_diagram("component k framed 0\npd k\n"), LaurentPoly(1)},
  };
  for (const auto& c : cases) {
    const LaurentPoly s = alexander(c.d, "k");
    const LaurentPoly f = alexander_fox_oracle(c.d, "k");
    o.require(s == c.expected, std::string(c.name) + ": Seifert gives " + s.to_string());
    o.require(f == c.expected, std::string(c.name) + ": Fox gives " + f.to_string());
    o.require(abs(s.at_one()) == 1, std::string(c.name) + ": Δ(1) ≠ ±1");
    o.require(s.inverted() == s, std::string(c.name) + ": not palindromic");
  }
  return o;
}

Outcome mazur_balls() {
  Outcome o;
  for (long f = -5; f <= 5; ++f) {
    Diagram d;
    d.add_component(Component::dotted_circle("u"));
    d.add_component(Component::framed_knot("h", f), {1});
    const std::string tag = "f = " + std::to_string(f);
    o.require(h1_manifold(d).trivial(), tag + ": H₁(X) ≠ 0");
    o.require(euler_characteristic(d) == 1, tag + ": χ ≠ 1");
    o.require(abs(determinant(boundary_matrix(d))) == 1, tag + ": |det ∂| ≠ 1");
    o.require(is_homology_ball(d), tag + ": not certified as a homology ball");
  }
  return o;
}

}  // namespace

namespace {

std::string cli_path;

std::string framed_pick(std::mt19937_64& rng, const Diagram& d, std::size_t* index) {
  std::vector<std::size_t> framed;
  for (std::size_t i = 0; i < d.size(); ++i)
    if (d.component(i).framed()) framed.push_back(i);
  if (framed.empty()) return {};
  *index = framed[static_cast<std::size_t>(uniform(rng, 0, static_cast<long>(framed.size()) - 1))];
  return d.component(*index).id;
}

Outcome move_suite() {
  Outcome o;
  std::mt19937_64 rng(20240601);
  long checks = 0;
  for (int trial = 0; trial < kRandomDiagrams; ++trial) {
    const Diagram d = random_diagram(rng, 8, -5, 5);
    const AbelianGroup g = h1_boundary(d);
    const IntMatrix l = boundary_matrix(d);
    const std::string tag = "diagram " + std::to_string(trial) + ": ";
    auto check = [&](bool cond, const std::string& what) {
      ++checks;
      o.require(cond, tag + what);
    };

    const int eps = uniform(rng, 0, 1) ? 1 : -1;
    const Diagram up = blow_up(d, eps, random_framed_mult(rng, d));
    check(h1_boundary(up) == g, "blow_up changed H₁(∂)");
    check(blow_down(up, up.component(up.size() - 1).id) == d, "blow_up/blow_down round trip");

    const Diagram added = add_23_pair(d, "delta");
    check(h1_boundary(added) == g, "add_23 changed H₁(∂)");
    check(cancel_23(added, "delta") == d, "add_23/cancel_23 round trip");

    if (d.framed_count() >= 2) {
      std::size_t i = 0, j = 0;
      const std::string a = framed_pick(rng, d, &i);
      std::string b;
      do b = framed_pick(rng, d, &j);
      while (j == i);
      const int s = uniform(rng, 0, 1) ? 1 : -1;
      const Diagram slid = handle_slide(d, a, b, s);
      check(boundary_matrix(slid) == slide_oracle(l, i, j, s), "handle_slide differs from EᵀLE");
      check(h1_boundary(slid) == g, "handle_slide changed H₁(∂)");
    }

    // an ε-framed unknot linking framed components only, then blown down
    Diagram with_e = d;
    std::vector<Integer> links;
    Multiplicity around;
    for (const auto& c : d.components()) {
      const long v = c.framed() ? uniform(rng, -3, 3) : 0;
      links.emplace_back(v);
      if (v != 0) around.emplace_back(c.id, v);
    }
    with_e.add_component(Component::framed_knot("e", eps, true), links);
    const Diagram down = blow_down(with_e, "e");
    Diagram oracle = twist_region(with_e, -eps, around);
    oracle.remove_component(oracle.index_of("e"));
    check(down == oracle, "blow_down differs from twist_region + delete");
    check(h1_boundary(down) == h1_boundary(with_e), "blow_down changed H₁(∂)");

    // a cancelling 1/2 pair
    Diagram pair = d;
    std::vector<Integer> none(d.size(), 0), h_links;
    pair.add_component(Component::dotted_circle("u0"), none);
    for (std::size_t k = 0; k < d.size(); ++k) h_links.emplace_back(uniform(rng, -5, 5));
    h_links.emplace_back(1);
    pair.add_component(Component::framed_knot("h0", uniform(rng, -5, 5)), h_links);
    const Diagram cancelled = cancel_12(pair, "u0", "h0");
    check(h1_boundary(cancelled) == h1_boundary(pair), "cancel_12 changed H₁(∂)");
    check(h1_boundary(pair) == g, "a cancelling pair changed H₁(∂)");
  }
  if (o.ok) o.detail = std::to_string(kRandomDiagrams) + " diagrams, " + std::to_string(checks) + " checks";
  return o;
}

Outcome delta_identity() {
  Outcome o;
  std::mt19937_64 rng(77);
  int runs = 0;
  for (int trial = 0; trial < 40; ++trial) {
    const Diagram d = random_diagram(rng, 8, -5, 5);
    DeltaData delta;
    delta.unknot = true;
    delta.c_plus = random_framed_mult(rng, d, 1, 3);
    delta.c_minus = delta.c_plus;
    for (int n = 1; n <= 10; ++n, ++runs) {
      const DeltaMoveResult r = delta_move(d, delta, n);
      o.require(r.diagram == d, "output differs from input, trial " + std::to_string(trial) + " n = " + std::to_string(n));
      o.require(r.script.moves.size() == static_cast<std::size_t>(5 * n), "script length is not 5n");
    }
  }
  if (o.ok) o.detail = std::to_string(runs) + " runs";
  return o;
}

void cork_invariants(Outcome& o, const Diagram& d, const std::vector<std::string>& h, const DeltaData& delta,
                     const std::string& tag) {
  const long chi = euler_characteristic(d), sigma = signature(d);
  const AbelianGroup g = h1_boundary(d);
  for (int n = 0; n <= 10; ++n) {
    const Diagram out = cork_twist(d, h, delta, n).diagram;
    const std::string at = tag + " n = " + std::to_string(n);
    o.require(euler_characteristic(out) == chi, at + ": χ changed");
    o.require(signature(out) == sigma, at + ": σ changed");
    o.require(h1_boundary(out) == g, at + ": H₁(∂) changed");
  }
}

Outcome cork_suite() {
  Outcome o;
  std::mt19937_64 rng(4242);
  for (int trial = 0; trial < 200; ++trial) {
    const Diagram d = random_diagram(rng, 8, -5, 5);
    std::vector<std::string> h;
    for (const auto& c : d.components())
      if (uniform(rng, 0, 1)) h.push_back(c.id);
    DeltaData delta;
    delta.unknot = true;
    delta.c_plus = random_framed_mult(rng, d, 1, 3);
    delta.c_minus = delta.c_plus;
    cork_invariants(o, d, h, delta, "random " + std::to_string(trial));
  }
  if (o.ok) o.detail = "200 random partitions, matched δ data, n = 0..10";
  return o;
}

std::string capture(const std::string& command, int* status) {
  std::string out;
  FILE* p = popen(command.c_str(), "r");
  if (!p) {
    *status = -1;
    return out;
  }
  char buf[4096];
  std::size_t got;
  while ((got = std::fread(buf, 1, sizeof buf, p)) > 0) out.append(buf, got);
  const int raw = pclose(p);
  *status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  return out;
}

Outcome lemma2_end_to_end() {
  Outcome o;
  Lemma2Options opt;
  opt.n_max = kTwistKnotMax;
  const auto t0 = Clock::now();
  const Lemma2Report first = verify_lemma2(opt);
  o.timed_ms = ms_since(t0);
  const Lemma2Report second = verify_lemma2(opt);
  o.require(first.passed(), "a step failed:\n" + first.text());
  o.require(first.text() == second.text(), "reports differ between runs");

  Lemma2Options tampered = opt;
  tampered.a = SL2Mat{1, 1, 0, 1};
  o.require(!verify_lemma2(tampered).passed(), "tampered generator still passes");

  if (!cli_path.empty()) {
    int status = 0;
    const std::string base = "'" + cli_path + "' verify-lemma2 --n-max " + std::to_string(kTwistKnotMax);
    const std::string out = capture(base, &status);
    o.require(status == 0, "CLI exit status " + std::to_string(status));
    o.require(out == "verify-lemma2 n_max=" + std::to_string(kTwistKnotMax) + "\n" + first.text(),
              "CLI report differs from the library report");
    (void)capture(base + " --tamper", &status);
    o.require(status == 1, "tampered CLI run exited with " + std::to_string(status) + ", expected 1");
  }
  return o;
}

}  // namespace

int main(int argc, char** argv) {
  if (argc > 1) cli_path = argv[1];
  run(1, "monodromy identity a·a·b = [[-1,-2],[1,1]]", kMonodromyIdentityMs, monodromy_identity);
  run(2, "centralizer of A is {±I, ±A} (structural and brute force, bound 25)", kCentralizerMs, centralizer_check);
  run(3, "A² = −I and order 4", kOrderMs, order_check);
  run(4, "mapping torus H₁ = Z ⊕ Z/2 via SNF diag(1,2)", kTorusH1Ms, torus_h1_check);
  run(5, "twist knot Alexander sweep, n = 1..25, Seifert = Fox", kAlexanderSweepMs, twist_knot_sweep);
  run(6, "trefoil, figure-eight and unknot Alexander polynomials", kNoLimit, small_knots);
  run(7, "move-engine property suite", kMoveSuiteMs, move_suite);
  run(8, "δ-move returns the same picture, n = 1..10", kNoLimit, delta_identity);
  run(9, "cork twist preserves χ, σ, H₁(∂)", kNoLimit, cork_suite);
  run(10, "Mazur pattern certifies a homology ball, f in [-5,5]", kNoLimit, mazur_balls);
  run(11, "verify-lemma2 end to end at n_max = 25", kLemma2Ms, lemma2_end_to_end);
  std::cout << (failures == 0 ? "ALL PASS" : std::to_string(failures) + " FAILED") << " (11 criteria)" << std::endl;
  return failures == 0 ? 0 : 1;
}
