#pragma once

// The checkable chain behind the distinctness of the knot-surgered manifolds:
// monodromy identity, centralizer, order, torus-bundle homology, twist-knot
// Alexander polynomials and the Seiberg–Witten distinguisher.

#include <string>
#include <vector>

#include "kirbykit/monodromy.hpp"

namespace kirbykit {

struct Lemma2Options {
  int n_max = 10;
  SL2Mat a = generator_a();
  SL2Mat b = generator_b();
  /// Worker threads for the Alexander sweep; 0 picks the hardware concurrency.
  unsigned threads = 0;
};

struct Lemma2Step {
  int id = 0;
  std::string title;
  bool passed = false;
  std::vector<std::string> details;
};

struct Lemma2Report {
  std::vector<Lemma2Step> steps;
  bool passed() const;
  /// Deterministic text: identical options give byte-identical output.
  std::string text() const;
};

/// Requires n_max ≥ 2. Step failures are reported, never thrown.
Lemma2Report verify_lemma2(const Lemma2Options& options);

}  // namespace kirbykit
