#pragma once

// Random diagrams and independent matrix oracles shared by the unit tests and
// the acceptance runner.

#include <random>
#include <string>
#include <vector>

#include "kirbykit/diagram.hpp"
#include "kirbykit/intalg.hpp"
#include "kirbykit/moves.hpp"

namespace testsupport {

using kirbykit::Diagram;
using kirbykit::IntMatrix;
using kirbykit::Integer;

inline long uniform(std::mt19937_64& rng, long lo, long hi) {
  return std::uniform_int_distribution<long>(lo, hi)(rng);
}

/// 1..max_components components, entries in [lo, hi]; roughly a quarter dotted.
inline Diagram random_diagram(std::mt19937_64& rng, std::size_t max_components = 8, long lo = -5, long hi = 5,
                              bool allow_dotted = true) {
  Diagram d;
  const std::size_t n = static_cast<std::size_t>(uniform(rng, 1, static_cast<long>(max_components)));
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<Integer> links;
    for (std::size_t j = 0; j < i; ++j) links.emplace_back(uniform(rng, lo, hi));
    const bool dotted = allow_dotted && uniform(rng, 0, 3) == 0;
    const std::string id = "c" + std::to_string(i + 1);
    d.add_component(dotted ? kirbykit::Component::dotted_circle(id)
                           : kirbykit::Component::framed_knot(id, uniform(rng, lo, hi), uniform(rng, 0, 1) == 1),
                    links);
  }
  return d;
}

/// Boundary matrix built entry by entry, independent of linking_matrix().
inline IntMatrix boundary_matrix(const Diagram& d) {
  IntMatrix m(d.size(), d.size());
  for (std::size_t i = 0; i < d.size(); ++i)
    for (std::size_t j = 0; j < d.size(); ++j)
      m(i, j) = i == j ? (d.component(i).dotted() ? Integer(0) : d.component(i).framing) : d.lk(i, j);
  return m;
}

/// Eᵀ L E with E = I + s e_j e_iᵀ (column j added s times to column i).
inline IntMatrix slide_oracle(const IntMatrix& l, std::size_t i, std::size_t j, long s) {
  IntMatrix e = IntMatrix::identity(l.rows());
  e(j, i) = s;
  return e.transposed() * l * e;
}

/// L + eps v vᵀ.
inline IntMatrix twist_oracle(const IntMatrix& l, long eps, const std::vector<Integer>& v) {
  IntMatrix out = l;
  for (std::size_t i = 0; i < l.rows(); ++i)
    for (std::size_t j = 0; j < l.cols(); ++j) out(i, j) += eps * v[i] * v[j];
  return out;
}

/// Random multiplicity over the framed components only (twists never cross dotted circles).
inline kirbykit::Multiplicity random_framed_mult(std::mt19937_64& rng, const Diagram& d, long lo = -2, long hi = 2) {
  kirbykit::Multiplicity m;
  for (const auto& c : d.components())
    if (c.framed() && uniform(rng, 0, 1) == 1) m.emplace_back(c.id, uniform(rng, lo, hi));
  return m;
}

}  // namespace testsupport
