#pragma once

// Framed-link handlebody diagrams.
//
// A diagram always carries an algebraic layer (component kinds, framings and
// pairwise linking numbers) and may carry a planar layer: PD-style crossing
// data for some of its components. Crossings are written X(a,b,c,d,s): the four
// arc labels are read counterclockwise starting at the incoming under-strand,
// so a -> c is the under-strand and b, d are the over-strand arcs. A crossing
// is positive when the over-strand runs from d to b; this is the right-handed
// crossing, and the positive Hopf link has linking number +1.
//
// Each `pd <id>` line lists the crossings at which component <id> passes
// under. Arc labels along a component are consecutive in its direction of
// travel (the largest label is followed by the smallest).

#include <array>
#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "kirbykit/intalg.hpp"

namespace kirbykit {

enum class ComponentKind { dotted, framed };

struct Component {
  std::string id;
  ComponentKind kind = ComponentKind::framed;
  Integer framing = 0;  // always 0 for dotted circles
  bool unknot = false;  // caller-asserted certificate, never inferred

  bool dotted() const { return kind == ComponentKind::dotted; }
  bool framed() const { return kind == ComponentKind::framed; }

  static Component dotted_circle(std::string id, bool unknot = true);
  static Component framed_knot(std::string id, Integer framing, bool unknot = false);

  friend bool operator==(const Component&, const Component&) = default;
};

struct PDCrossing {
  std::array<long, 4> arcs{};
  int sign = 1;

  friend bool operator==(const PDCrossing&, const PDCrossing&) = default;
};

/// One `pd` line: a component and the crossings where it is the under-strand.
struct PDLine {
  std::string component;
  std::vector<PDCrossing> crossings;

  friend bool operator==(const PDLine&, const PDLine&) = default;
};

struct PlanarData {
  std::vector<PDLine> lines;

  bool covers(std::string_view id) const;
  std::size_t crossing_count() const;

  friend bool operator==(const PlanarData&, const PlanarData&) = default;
};

enum class DottedAs { zero, excluded };

class Diagram {
 public:
  Diagram() = default;

  std::size_t size() const { return components_.size(); }
  bool empty() const { return components_.empty(); }
  const std::vector<Component>& components() const { return components_; }
  const Component& component(std::size_t i) const { return components_.at(i); }
  const Component& component(std::string_view id) const { return components_[index_of(id)]; }

  bool contains(std::string_view id) const;
  /// Throws PreconditionError for unknown ids.
  std::size_t index_of(std::string_view id) const;

  /// Stored algebraic linking number; lk(i, i) is not defined.
  const Integer& lk(std::size_t i, std::size_t j) const;
  void set_lk(std::size_t i, std::size_t j, const Integer& value);
  void set_framing(std::size_t i, const Integer& framing);
  void set_unknot(std::size_t i, bool certified) { components_.at(i).unknot = certified; }

  /// Appends a component; `links[k]` is its linking number with component k
  /// (missing entries are zero). Throws on duplicate ids.
  void add_component(Component c, const std::vector<Integer>& links = {});
  void remove_component(std::size_t i);
  /// Moves component `from` to position `to`, shifting the others.
  void move_component(std::size_t from, std::size_t to);

  long three_handles() const { return three_handles_; }
  void set_three_handles(long n);

  const std::optional<PlanarData>& planar() const { return planar_; }
  /// Installs planar data and checks it against the algebraic layer.
  void set_planar(PlanarData p);
  /// Planar data was invalidated by a move that rewrote the algebraic layer.
  bool planar_stale() const { return planar_stale_; }
  void invalidate_planar();

  const std::map<std::string, std::string>& meta() const { return meta_; }
  void set_meta(const std::string& key, const std::string& value) { meta_[key] = value; }

  std::size_t dotted_count() const;
  std::size_t framed_count() const;

  /// Checks every invariant: unique ids, symmetric linking, planar coherence.
  void validate() const;

  friend bool operator==(const Diagram&, const Diagram&) = default;

 private:
  std::vector<Component> components_;
  std::vector<std::vector<Integer>> lk_;
  long three_handles_ = 0;
  std::optional<PlanarData> planar_;
  bool planar_stale_ = false;
  std::map<std::string, std::string> meta_;
};

/// Parses the line-oriented diagram text format. Throws ParseError naming the line.
Diagram parse_diagram(std::string_view text);
/// Canonical serialization; parse_diagram(serialize_diagram(d)) == d.
std::string serialize_diagram(const Diagram& d);

/// Linking number of two distinct components: from crossing data when both are
/// covered by fresh planar data, otherwise the stored algebraic value.
Integer linking_number(const Diagram& d, std::string_view a, std::string_view b);

/// Symmetric matrix with framings on the diagonal. Dotted circles are either kept
/// with diagonal 0 (presenting the boundary) or dropped.
IntMatrix linking_matrix(const Diagram& d, DottedAs dotted_as);

}  // namespace kirbykit
