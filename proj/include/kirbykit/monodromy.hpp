#pragma once

// SL(2,Z) monodromies of torus bundles: Dehn twist words, centralizers, orders,
// H₁ of the mapping torus and the extension verdict for fiber maps.

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "kirbykit/intalg.hpp"

namespace kirbykit {

/// [[p, q], [r, s]] with ps - qr = 1.
struct SL2Mat {
  Integer p = 1, q = 0, r = 0, s = 1;

  /// Throws PreconditionError unless the determinant is 1.
  static SL2Mat from_entries(const Integer& p, const Integer& q, const Integer& r, const Integer& s);
  static SL2Mat identity() { return {}; }

  Integer trace() const { return p + s; }
  SL2Mat inverse() const;
  SL2Mat operator-() const;
  IntMatrix to_matrix() const;
  /// "[[p,q],[r,s]]"
  std::string to_string() const;

  friend SL2Mat operator*(const SL2Mat& x, const SL2Mat& y);
  friend bool operator==(const SL2Mat&, const SL2Mat&) = default;
  friend bool operator<(const SL2Mat& x, const SL2Mat& y);
};

/// Word over a, A = a⁻¹, b, B = b⁻¹.
using TwistWord = std::string;

SL2Mat generator_a();  // [[1,-1],[0,1]]
SL2Mat generator_b();  // [[1,0],[1,1]]
/// Left-to-right product; throws ParseError on letters outside "aAbB".
SL2Mat evaluate(std::string_view word);
TwistWord inverse_word(std::string_view word);

enum class MonodromyClass { elliptic, parabolic, hyperbolic };
std::string to_string(MonodromyClass c);

struct OrderAndClass {
  Integer trace;
  std::optional<int> order;  // nullopt: infinite order
  MonodromyClass kind = MonodromyClass::elliptic;
};

/// Finite-order matrices (±I included) are elliptic; otherwise |tr| = 2 is parabolic
/// and |tr| > 2 hyperbolic.
OrderAndClass order_and_class(const SL2Mat& a);

/// Matrices commuting with A, solved through the commutant Z[I, A'] with
/// A' = (A - pI) / gcd(q, r, s - p) and the form det(xI + yA') = 1.
struct Centralizer {
  enum class Kind { everything, finite, cyclic };
  Kind kind = Kind::everything;
  /// finite: every element; cyclic: the torsion part {I, -I}.
  std::vector<SL2Mat> elements;
  /// cyclic: the group is {±G^k : k ∈ Z}.
  std::optional<SL2Mat> generator;

  bool contains(const SL2Mat& b) const;
  /// Members with every entry in [-bound, bound], sorted.
  std::vector<SL2Mat> in_box(long bound) const;
  std::string describe() const;
};

Centralizer centralizer(const SL2Mat& a);
/// Exhaustive search over entries in [-bound, bound], sorted. Independent of centralizer().
std::vector<SL2Mat> centralizer_bruteforce(const SL2Mat& a, long bound);

/// H₁ of the mapping torus: Z ⊕ coker(A - I).
AbelianGroup torus_bundle_h1(const SL2Mat& a);

enum class ExtensionVerdict { extends_known, obstructed_unknown };
std::string to_string(ExtensionVerdict v);
/// B ∈ {±I, ±A} extends over the filling by the known maps; anything else is left open.
/// Throws PreconditionError when A and B do not commute.
ExtensionVerdict extension_verdict(const SL2Mat& a, const SL2Mat& b);

}  // namespace kirbykit
