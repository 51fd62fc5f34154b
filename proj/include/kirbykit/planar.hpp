#pragma once

// Oriented PD codes as graphs, plus the algorithms that need crossing data:
// planar linking numbers, knot extraction, Seifert circles, conversion to a
// closed braid (Vogel moves), Seifert matrices, and the Wirtinger/Fox
// Alexander polynomial.

#include <array>
#include <cstddef>
#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "kirbykit/diagram.hpp"
#include "kirbykit/intalg.hpp"
#include "kirbykit/laurent.hpp"

namespace kirbykit::planar {

// Slot layout of a crossing, counterclockwise from the incoming under-strand.
inline constexpr int kUnderIn = 0;
inline constexpr int kUnderOut = 2;

struct Crossing {
  std::array<int, 4> edge{};
  int sign = 1;

  int over_in_slot() const { return sign > 0 ? 3 : 1; }
  int over_out_slot() const { return sign > 0 ? 1 : 3; }
};

struct Port {
  int crossing = -1;
  int slot = -1;
  friend bool operator==(const Port&, const Port&) = default;
};

/// Oriented PD code with dense edge ids 0..edge_count-1.
class Graph {
 public:
  Graph() = default;
  Graph(std::vector<Crossing> crossings, std::vector<int> edge_component,
        std::vector<std::string> component_ids);

  const std::vector<Crossing>& crossings() const { return crossings_; }
  std::size_t edge_count() const { return edge_component_.size(); }
  const std::vector<std::string>& component_ids() const { return component_ids_; }
  int component_of(int edge) const { return edge_component_.at(static_cast<std::size_t>(edge)); }

  Port head(int edge) const { return head_.at(static_cast<std::size_t>(edge)); }
  Port tail(int edge) const { return tail_.at(static_cast<std::size_t>(edge)); }
  /// The edge that follows `edge` along its component.
  int next(int edge) const;

  /// Component index of the under- and over-strand at a crossing.
  int under_component(int crossing) const;
  int over_component(int crossing) const;

  /// Edge sequences of each component in order of travel (empty for zero-crossing components).
  std::vector<std::vector<int>> component_edges() const;

 private:
  void index_ports();

  std::vector<Crossing> crossings_;
  std::vector<int> edge_component_;
  std::vector<std::string> component_ids_;
  std::vector<Port> head_;
  std::vector<Port> tail_;
};

/// Validates planar data and builds its graph; components are the `pd` lines in order.
/// Throws ParseError on malformed codes.
Graph build_graph(const PlanarData& pd);

/// Converts a graph back to planar data, labelling arcs 1, 2, ... consecutively
/// along each component in order.
PlanarData to_planar_data(const Graph& g);

/// Linking numbers from signed crossings, keyed by (i, j) component indices with i < j.
std::map<std::pair<int, int>, Integer> crossing_linking(const Graph& g);

/// The single-component diagram of one component: crossings with other components are
/// dropped and the arcs they separated are merged.
Graph extract_knot(const Graph& g, std::string_view component);

/// Seifert circles, each as the cyclic list of edges it runs along.
std::vector<std::vector<int>> seifert_circles(const Graph& g);

/// Faces of the diagram as cyclic lists of (crossing, slot) darts; each face lies to
/// the left of its darts.
std::vector<std::vector<Port>> faces(const Graph& g);

/// A closed braid: generators are +-(i+1) for sigma_i^{+-1}, strands counted from 0.
struct Braid {
  int strands = 1;
  std::vector<int> word;
};

/// Rewrites a knot diagram into closed-braid position by Vogel moves and reads off
/// the braid word. Crossing signs are preserved as generator exponents.
Braid to_braid(const Graph& knot);

/// Seifert matrix of a knot diagram: Seifert's algorithm on the closed-braid form.
IntMatrix seifert_matrix(const Graph& knot);
/// Seifert matrix of the surface from Seifert's algorithm on a braid closure.
IntMatrix braid_seifert_matrix(const Braid& b);

/// Alexander polynomial of a knot from the Wirtinger presentation: Fox derivatives,
/// abelianized, one row and column deleted, symmetrically normalized.
LaurentPoly fox_alexander(const Graph& knot);

/// det(V - t V^T), symmetrically normalized.
LaurentPoly alexander_from_seifert(const IntMatrix& v);

// Diagram builders. Strand positions run bottom to top; each crossing exchanges
// positions i and i+1, with `rising_over` telling whether the strand moving up
// from i to i+1 is the over-strand.
struct StrandCrossing {
  int position = 0;
  bool rising_over = true;
};

enum class Closure { braid, plat };

/// Builds an oriented PD graph from a strand picture closed as a braid (position k
/// joined to itself around the axis) or as a plat (caps joining 2k, 2k+1 at both ends).
/// Components are named by `prefix` followed by 1, 2, ...; a single component is
/// named exactly `prefix`.
Graph build_strand_diagram(int strands, const std::vector<StrandCrossing>& crossings, Closure closure,
                           const std::string& prefix);

/// Closure of a braid word using the convention that sigma_i^{+1} is a positive crossing.
Graph braid_closure(const Braid& b, const std::string& prefix);

}  // namespace kirbykit::planar
