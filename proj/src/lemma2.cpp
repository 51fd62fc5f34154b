#include "kirbykit/lemma2.hpp"

#include <algorithm>
#include <atomic>
#include <thread>

#include "kirbykit/error.hpp"
#include "kirbykit/invariants.hpp"

namespace kirbykit {

namespace {

const SL2Mat kExpectedA{-1, -2, 1, 1};

std::string set_text(const std::vector<SL2Mat>& ms) {
  std::string s = "{";
  for (std::size_t i = 0; i < ms.size(); ++i) s += (i ? ", " : "") + ms[i].to_string();
  return s + "}";
}

Lemma2Step step_monodromy(const Lemma2Options& o, const SL2Mat& a) {
  Lemma2Step s{1, "monodromy A = a·a·b", a == kExpectedA, {}};
  s.details = {"a = " + o.a.to_string(), "b = " + o.b.to_string(), "A = " + a.to_string(),
               "expected " + kExpectedA.to_string()};
  return s;
}

Lemma2Step step_centralizer(const SL2Mat& a) {
  Lemma2Step s{2, "centralizer of A is {±I, ±A}", false, {}};
  std::vector<SL2Mat> expected{SL2Mat::identity(), -SL2Mat::identity(), a, -a};
  std::sort(expected.begin(), expected.end());
  expected.erase(std::unique(expected.begin(), expected.end()), expected.end());
  const Centralizer c = centralizer(a);
  const auto brute = centralizer_bruteforce(a, 25);
  const bool structural = c.kind == Centralizer::Kind::finite && c.elements == expected;
  s.passed = structural && brute == expected;
  s.details = {"structural: " + c.describe(), "brute force (entries in [-25,25]): " + set_text(brute),
               "expected: " + set_text(expected)};
  return s;
}

Lemma2Step step_order(const SL2Mat& a) {
  const OrderAndClass oc = order_and_class(a);
  const bool square = a * a == -SL2Mat::identity();
  Lemma2Step s{3, "A² = -I and A has order 4", square && oc.order == 4, {}};
  s.details = {"A² = " + (a * a).to_string(), "trace " + oc.trace.get_str() + ", order " +
                                                  (oc.order ? std::to_string(*oc.order) : std::string("infinite")) +
                                                  ", " + to_string(oc.kind)};
  return s;
}

Lemma2Step step_torus_bundle(const SL2Mat& a) {
  IntMatrix m = a.to_matrix();
  m(0, 0) -= 1;
  m(1, 1) -= 1;
  const auto factors = smith_normal_form(m).invariant_factors();
  const AbelianGroup h1 = torus_bundle_h1(a);
  Lemma2Step s{4, "H₁ of the mapping torus is Z ⊕ Z/2", h1 == AbelianGroup{1, {2}}, {}};
  std::string diag;
  for (std::size_t i = 0; i < factors.size(); ++i) diag += (i ? "," : "") + factors[i].get_str();
  s.details = {"Smith form of A - I: diag(" + diag + ")", "H₁ = " + h1.to_string()};
  return s;
}

struct KnotRow {
  LaurentPoly seifert, fox;
  std::string error;
};

Lemma2Step step_alexander(int n_max, unsigned threads, std::vector<KnotRow>& rows) {
  rows.assign(static_cast<std::size_t>(n_max) + 1, {});
  std::atomic<int> next{1};
  auto work = [&] {
    for (int n = next++; n <= n_max; n = next++) {
      KnotRow& row = rows[static_cast<std::size_t>(n)];
      try {
        const Diagram k = twist_knot(n);
        row.seifert = alexander(k, "k");
        row.fox = alexander_fox_oracle(k, "k");
      } catch (const Error& e) {
        row.error = e.what();
      }
    }
  };
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = std::min<unsigned>(threads, static_cast<unsigned>(n_max));
  std::vector<std::thread> pool;
  for (unsigned i = 1; i < threads; ++i) pool.emplace_back(work);
  work();
  for (auto& t : pool) t.join();

  Lemma2Step s{5, "twist knot Alexander polynomials agree and are pairwise distinct", true, {}};
  for (int n = 1; n <= n_max; ++n) {
    const KnotRow& row = rows[static_cast<std::size_t>(n)];
    if (!row.error.empty()) {
      s.passed = false;
      s.details.push_back("K_" + std::to_string(n) + ": error: " + row.error);
      continue;
    }
    const LaurentPoly expected = LaurentPoly::from_coefficients(-1, {n, -(2 * n + 1), n});
    const bool ok = row.seifert == row.fox && row.seifert == expected;
    s.passed = s.passed && ok;
    s.details.push_back("K_" + std::to_string(n) + ": seifert " + row.seifert.to_string() + " | fox " +
                        row.fox.to_string() + (ok ? "" : "  MISMATCH"));
  }
  long pairs = 0, equal = 0;
  for (int n = 1; n <= n_max; ++n)
    for (int m = n + 1; m <= n_max; ++m) {
      ++pairs;
      if (rows[static_cast<std::size_t>(n)].seifert == rows[static_cast<std::size_t>(m)].seifert) {
        ++equal;
        s.details.push_back("K_" + std::to_string(n) + " and K_" + std::to_string(m) + " share Δ");
      }
    }
  s.passed = s.passed && equal == 0;
  s.details.push_back(std::to_string(pairs - equal) + "/" + std::to_string(pairs) + " pairs distinct");
  return s;
}

Lemma2Step step_distinguish(int n_max) {
  Lemma2Step s{6, "knot-surgered manifolds distinguished for sw = 1", true, {}};
  long pairs = 0, distinct = 0;
  for (int n = 1; n <= n_max; ++n)
    for (int m = n + 1; m <= n_max; ++m) {
      ++pairs;
      Verdict v = Verdict::inconclusive;
      try {
        v = distinguish_sn(n, m, 1);
      } catch (const Error& e) {
        s.details.push_back("(" + std::to_string(n) + "," + std::to_string(m) + "): error: " + e.what());
      }
      if (v == Verdict::distinct)
        ++distinct;
      else
        s.details.push_back("(" + std::to_string(n) + "," + std::to_string(m) + "): " + to_string(v));
    }
  s.passed = distinct == pairs;
  s.details.push_back(std::to_string(distinct) + "/" + std::to_string(pairs) + " pairs distinct");
  return s;
}

}  // namespace

bool Lemma2Report::passed() const {
  return std::all_of(steps.begin(), steps.end(), [](const Lemma2Step& s) { return s.passed; });
}

std::string Lemma2Report::text() const {
  std::string out;
  int ok = 0;
  for (const auto& s : steps) {
    ok += s.passed;
    out += "step " + std::to_string(s.id) + " " + (s.passed ? "PASS" : "FAIL") + "  " + s.title + "\n";
    for (const auto& d : s.details) out += "    " + d + "\n";
  }
  out += std::string("result: ") + (passed() ? "PASS" : "FAIL") + " (" + std::to_string(ok) + "/" +
         std::to_string(steps.size()) + " steps)\n";
  return out;
}

Lemma2Report verify_lemma2(const Lemma2Options& o) {
  if (o.n_max < 2) throw PreconditionError("n_max must be at least 2");
  const SL2Mat a = o.a * o.a * o.b;
  Lemma2Report r;
  r.steps.push_back(step_monodromy(o, a));
  r.steps.push_back(step_centralizer(a));
  r.steps.push_back(step_order(a));
  r.steps.push_back(step_torus_bundle(a));
  std::vector<KnotRow> rows;
  r.steps.push_back(step_alexander(o.n_max, o.threads, rows));
  r.steps.push_back(step_distinguish(o.n_max));
  return r;
}

}  // namespace kirbykit
