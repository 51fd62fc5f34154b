#pragma once

// Homological invariants of a handle diagram, knot Alexander polynomials and the
// formal Seiberg–Witten bookkeeping used to tell the knot-surgered manifolds apart.

#include <string>
#include <string_view>

#include "kirbykit/diagram.hpp"
#include "kirbykit/intalg.hpp"
#include "kirbykit/laurent.hpp"

namespace kirbykit {

struct HandleCounts {
  long h0 = 1;
  long h1 = 0;
  long h2 = 0;
  long h3 = 0;
  friend bool operator==(const HandleCounts&, const HandleCounts&) = default;
};

HandleCounts handle_counts(const Diagram& d);

/// H₁ of the 4-manifold: generated by the dotted circles, one relation per 2-handle.
AbelianGroup h1_manifold(const Diagram& d);
/// H₁ of the boundary 3-manifold: cokernel of the linking matrix with dotted circles
/// as 0, less one free summand per 3-handle. Throws PreconditionError when there are
/// more 3-handles than free summands.
AbelianGroup h1_boundary(const Diagram& d);
bool is_homology_sphere_boundary(const Diagram& d);
/// Boundary is a homology sphere, H₁ vanishes and χ = 1.
bool is_homology_ball(const Diagram& d);
long euler_characteristic(const Diagram& d);
/// Signature of the framed part (dotted circles dropped).
long signature(const Diagram& d);

/// Alexander polynomial of a knot component from its Seifert matrix. Requires fresh
/// planar data covering the component; checks det(V - Vᵀ) = ±1.
LaurentPoly alexander(const Diagram& d, std::string_view component);
/// Same polynomial from the Wirtinger presentation and Fox calculus.
LaurentPoly alexander_fox_oracle(const Diagram& d, std::string_view component);

/// The twist knot K_n (n ≥ 1) as a 0-framed component "k" with planar data, drawn as
/// a closed braid (3n + 1 crossings, 4 for n = 1): Δ = n t⁻¹ - (2n+1) + n t, det = 4n + 1.
Diagram twist_knot(int n);

/// alexander(twist_knot(n), "k"), memoized (thread-safe).
LaurentPoly twist_knot_alexander(int n);

/// Formal Seiberg–Witten series of a closed manifold along the surgery torus.
using FormalSW = LaurentPoly;

/// Knot surgery multiplies the series by the knot's Alexander polynomial.
FormalSW knot_surgery_sw(const FormalSW& sw, const LaurentPoly& delta);

enum class Verdict { distinct, inconclusive };
std::string to_string(Verdict v);

/// Distinguishes the surgered manifolds for K_n and K_m (n, m ≥ 1). Never claims "same".
Verdict distinguish_sn(int n, int m, const FormalSW& sw);

}  // namespace kirbykit
