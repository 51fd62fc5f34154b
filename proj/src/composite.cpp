// The δ-move and the cork twist built on top of the primitive moves.

#include <algorithm>
#include <map>
#include <set>

#include "kirbykit/moves.hpp"

namespace kirbykit {

namespace {

std::map<std::string, Integer> as_map(const Multiplicity& m, const char* what) {
  std::map<std::string, Integer> out;
  for (const auto& [id, c] : m)
    if (!out.emplace(id, c).second) throw PreconditionError(id + " listed twice in " + what);
  return out;
}

Integer count_of(const std::map<std::string, Integer>& m, const std::string& id) {
  const auto it = m.find(id);
  return it == m.end() ? Integer(0) : it->second;
}

// Components in diagram order with their nonzero entries of f(id).
template <class F>
Multiplicity in_diagram_order(const Diagram& d, F f) {
  Multiplicity out;
  for (const auto& c : d.components()) {
    const Integer v = f(c.id);
    if (v != 0) out.emplace_back(c.id, v);
  }
  return out;
}

void check_delta(const Diagram& d, const DeltaData& delta) {
  if (!delta.unknot) throw PreconditionError("δ needs an unknot certificate before a δ-move");
  for (const auto* m : {&delta.c_plus, &delta.c_minus})
    for (const auto& [id, c] : *m)
      if (!d.contains(id)) throw PreconditionError("δ data names unknown component '" + id + "'");
}

// Same handles, framings, linking and 3-handles; planar data ignored.
bool same_algebra(const Diagram& a, const Diagram& b) {
  if (a.components() != b.components() || a.three_handles() != b.three_handles()) return false;
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = i + 1; j < a.size(); ++j)
      if (a.lk(i, j) != b.lk(i, j)) return false;
  return true;
}

}  // namespace

MoveScript delta_script(const Diagram& d, const DeltaData& delta, int n) {
  if (n < 1) throw PreconditionError("δ-move count must be at least 1");
  check_delta(d, delta);
  if (d.contains(delta.id)) throw PreconditionError("δ id '" + delta.id + "' is already a component");
  const auto plus = as_map(delta.c_plus, "C+");
  const auto minus = as_map(delta.c_minus, "C-");

  // δ = C₊ # C₋ links each strand by (count through C₊) - (count through C₋).
  const Multiplicity delta_links =
      in_diagram_order(d, [&](const std::string& id) -> Integer { return count_of(plus, id) - count_of(minus, id); });
  const Multiplicity around_plus = in_diagram_order(d, [&](const std::string& id) -> Integer { return count_of(plus, id); });

  Diagram with_delta = d;
  with_delta.add_component(Component::framed_knot(delta.id, 0, true));
  std::string e;
  for (long k = 1;; ++k) {
    e = "e" + std::to_string(k);
    if (!with_delta.contains(e)) break;
  }

  MoveScript one;
  Move add;
  add.kind = MoveKind::add23;
  add.a = delta.id;
  add.m = delta_links;
  Move up;
  up.kind = MoveKind::blowup;
  up.eps = 1;
  up.m = around_plus;
  Move slide;
  slide.kind = MoveKind::slide;
  slide.a = e;
  slide.b = delta.id;
  slide.eps = -1;
  Move down;
  down.kind = MoveKind::blowdown;
  down.a = e;
  Move cancel;
  cancel.kind = MoveKind::cancel23;
  cancel.a = delta.id;
  one.moves = {add, up, slide, down, cancel};

  MoveScript all;
  for (int i = 0; i < n; ++i) all.moves.insert(all.moves.end(), one.moves.begin(), one.moves.end());
  return all;
}

DeltaMoveResult delta_move(const Diagram& d, const DeltaData& delta, int n) {
  MoveScript script = delta_script(d, delta, n);
  Diagram out = replay(d, script);
  // The composite is a boundary diffeomorphism: when it returns the same handle
  // data, the picture (planar layer included) is the one we started from.
  if (same_algebra(out, d)) out = d;
  return {std::move(out), std::move(script)};
}

CorkTwistResult cork_twist(const Diagram& d, const std::vector<std::string>& h_side, const DeltaData& delta, int n) {
  if (n < 0) throw PreconditionError("cork twist power must be nonnegative");
  for (const auto& id : h_side)
    if (!d.contains(id)) throw PreconditionError("H side names unknown component '" + id + "'");
  const std::set<std::string> h(h_side.begin(), h_side.end());
  if (h.size() != h_side.size()) throw PreconditionError("H side lists a component twice");
  const auto plus = as_map(delta.c_plus, "C+");
  const auto minus = as_map(delta.c_minus, "C-");
  for (const auto* m : {&plus, &minus})
    for (const auto& [id, c] : *m)
      if (!d.contains(id)) throw PreconditionError("δ data names unknown component '" + id + "'");

  CorkTwistResult r{d, {}};
  bool touches_h = false;
  bool asymmetric = false;
  std::vector<Integer> mp(d.size()), mm(d.size());
  for (std::size_t i = 0; i < d.size(); ++i) {
    const std::string& id = d.component(i).id;
    const Integer p = count_of(plus, id);
    const Integer q = count_of(minus, id);
    if (!h.count(id)) {
      if (p != q)
        throw PreconditionError("δ must cross W-side component " + id + " equally often through C+ and C-");
      continue;
    }
    if (p != 0 || q != 0) {
      touches_h = true;
      if (d.component(i).dotted()) throw PreconditionError("δ cannot pass through H-side dotted circle " + id);
    }
    if (p != q) asymmetric = true;
    mp[i] = p;
    mm[i] = q;
  }
  if (!touches_h) {
    r.warnings.push_back("δ meets no H-side strands; the twist is vacuous");
    return r;
  }
  if (asymmetric)
    r.warnings.push_back(
        "H-side strands cross C+ and C- unequally; the regluing is only guaranteed to fix the boundary when they match");
  if (n == 0) return r;

  Diagram& out = r.diagram;
  for (std::size_t i = 0; i < d.size(); ++i) {
    if (!h.count(d.component(i).id)) continue;
    for (std::size_t j = i; j < d.size(); ++j) {
      if (!h.count(d.component(j).id)) continue;
      const Integer delta_ij = n * (mp[i] * mp[j] - mm[i] * mm[j]);
      if (delta_ij == 0) continue;
      if (i == j)
        out.set_framing(i, out.component(i).framing + delta_ij);
      else
        out.set_lk(i, j, out.lk(i, j) + delta_ij);
    }
  }
  if (!same_algebra(out, d) && d.planar()) {
    // any H-side change touching a planar component drops the planar layer
    for (const auto& line : d.planar()->lines)
      if (h.count(line.component)) {
        const std::size_t i = d.index_of(line.component);
        bool changed = out.component(i) != d.component(i);
        for (std::size_t j = 0; j < d.size() && !changed; ++j) changed = j != i && out.lk(i, j) != d.lk(i, j);
        if (changed) {
          out.invalidate_planar();
          break;
        }
      }
  }
  return r;
}

}  // namespace kirbykit
