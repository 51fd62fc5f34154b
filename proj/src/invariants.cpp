#include "kirbykit/invariants.hpp"

#include <map>
#include <mutex>

#include "kirbykit/error.hpp"
#include "kirbykit/planar.hpp"

namespace kirbykit {

HandleCounts handle_counts(const Diagram& d) {
  return {1, static_cast<long>(d.dotted_count()), static_cast<long>(d.framed_count()), d.three_handles()};
}

AbelianGroup h1_manifold(const Diagram& d) {
  std::vector<std::size_t> dotted, framed;
  for (std::size_t i = 0; i < d.size(); ++i) (d.component(i).dotted() ? dotted : framed).push_back(i);
  // column j: the class of 2-handle j's attaching circle in H₁ of the 1-handlebody
  IntMatrix m(dotted.size(), framed.size());
  for (std::size_t r = 0; r < dotted.size(); ++r)
    for (std::size_t c = 0; c < framed.size(); ++c) m(r, c) = d.lk(dotted[r], framed[c]);
  return cokernel(m);
}

AbelianGroup h1_boundary(const Diagram& d) {
  AbelianGroup g = cokernel(linking_matrix(d, DottedAs::zero));
  // Each 3-handle caps off an S¹×S² summand of the 2-handlebody's boundary.
  const auto h3 = static_cast<std::size_t>(d.three_handles());
  if (h3 > g.free_rank)
    throw PreconditionError(std::to_string(h3) + " 3-handles but the boundary of the 2-handlebody has only " +
                            std::to_string(g.free_rank) + " free summands");
  g.free_rank -= h3;
  return g;
}

bool is_homology_sphere_boundary(const Diagram& d) {
  if (d.three_handles() == 0) {
    const Integer det = determinant(linking_matrix(d, DottedAs::zero));
    return det == 1 || det == -1;
  }
  return h1_boundary(d).trivial();
}

bool is_homology_ball(const Diagram& d) {
  return is_homology_sphere_boundary(d) && h1_manifold(d).trivial() && euler_characteristic(d) == 1;
}

long euler_characteristic(const Diagram& d) {
  const HandleCounts h = handle_counts(d);
  return h.h0 - h.h1 + h.h2 - h.h3;
}

long signature(const Diagram& d) { return signature(linking_matrix(d, DottedAs::excluded)); }

namespace {

planar::Graph knot_graph(const Diagram& d, std::string_view component) {
  const std::string id(component);
  if (!d.contains(id)) throw PreconditionError("unknown component '" + id + "'");
  if (d.planar_stale())
    throw PreconditionError("planar data is stale: a move rewrote the diagram after the crossings were recorded");
  if (!d.planar() || !d.planar()->covers(id))
    throw PreconditionError("no planar data for component '" + id + "'");
  return planar::extract_knot(planar::build_graph(*d.planar()), id);
}

void check_knot_polynomial(const LaurentPoly& p, const std::string& method) {
  const Integer one = p.at_one();
  if (one != 1 && one != -1)
    throw VerificationError(method + " Alexander polynomial has Δ(1) = " + one.get_str() + ", expected ±1");
  if (!(p.inverted() == p)) throw VerificationError(method + " Alexander polynomial is not symmetric");
}

}  // namespace

LaurentPoly alexander(const Diagram& d, std::string_view component) {
  const IntMatrix v = planar::seifert_matrix(knot_graph(d, component));
  const Integer det = determinant(v - v.transposed());
  if (det != 1 && det != -1)
    throw VerificationError("Seifert matrix has det(V - Vᵀ) = " + det.get_str() + ", expected ±1");
  LaurentPoly p = planar::alexander_from_seifert(v);
  check_knot_polynomial(p, "Seifert");
  return p;
}

LaurentPoly alexander_fox_oracle(const Diagram& d, std::string_view component) {
  LaurentPoly p = planar::fox_alexander(knot_graph(d, component));
  check_knot_polynomial(p, "Fox");
  return p;
}

Diagram twist_knot(int n) {
  if (n < 1) throw PreconditionError("twist knot index must be at least 1");
  // Closed braid on n + 2 strands: the 2n-crossing twist region of the usual picture
  // is spread across the strands so that the diagram is already braided.
  planar::Braid b{3, {1, -2, 1, -2}};
  if (n >= 2) {
    b.strands = n + 2;
    b.word = {1, 1, 2, -1};
    for (int i = 2; i < n; ++i) b.word.insert(b.word.end(), {i, i + 1, -i});
    b.word.insert(b.word.end(), {-(n + 1), n, -(n + 1)});
  }
  Diagram d;
  d.add_component(Component::framed_knot("k", 0));
  d.set_planar(planar::to_planar_data(planar::braid_closure(b, "k")));
  d.set_meta("name", "twist-knot:" + std::to_string(n));
  return d;
}

LaurentPoly twist_knot_alexander(int n) {
  static std::mutex mutex;
  static std::map<int, LaurentPoly> cache;
  {
    const std::lock_guard lock(mutex);
    if (const auto it = cache.find(n); it != cache.end()) return it->second;
  }
  LaurentPoly p = alexander(twist_knot(n), "k");
  const std::lock_guard lock(mutex);
  return cache.emplace(n, std::move(p)).first->second;
}

FormalSW knot_surgery_sw(const FormalSW& sw, const LaurentPoly& delta) { return sw * delta; }

std::string to_string(Verdict v) { return v == Verdict::distinct ? "distinct" : "inconclusive"; }

Verdict distinguish_sn(int n, int m, const FormalSW& sw) {
  if (n < 1 || m < 1) throw PreconditionError("twist knot indices must be at least 1");
  if (sw.is_zero() || n == m) return Verdict::inconclusive;
  const FormalSW a = knot_surgery_sw(sw, twist_knot_alexander(n));
  const FormalSW b = knot_surgery_sw(sw, twist_knot_alexander(m));
  return a == b ? Verdict::inconclusive : Verdict::distinct;
}

}  // namespace kirbykit
