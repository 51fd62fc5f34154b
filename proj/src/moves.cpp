#include "kirbykit/moves.hpp"

#include <algorithm>
#include <set>

namespace kirbykit {

namespace {

std::vector<Integer> dense(const Diagram& d, const Multiplicity& m) {
  std::vector<Integer> v(d.size(), Integer(0));
  std::set<std::string> seen;
  for (const auto& [id, count] : m) {
    if (!seen.insert(id).second) throw PreconditionError("component " + id + " listed twice in a multiplicity vector");
    v[d.index_of(id)] = count;
  }
  return v;
}

void require_not_dotted(const Diagram& d, const std::vector<Integer>& m, const char* what) {
  for (std::size_t i = 0; i < d.size(); ++i)
    if (m[i] != 0 && d.component(i).dotted())
      throw PreconditionError(std::string(what) + " cannot pass through dotted circle " + d.component(i).id);
}

void require_eps(int eps) {
  if (eps != 1 && eps != -1) throw PreconditionError("sign must be +1 or -1");
}

// Planar data survives only if none of the components it covers changed.
void settle_planar(const Diagram& before, Diagram& after) {
  if (!before.planar()) return;
  const PlanarData& p = *before.planar();
  for (const auto& line : p.lines) {
    const std::string& id = line.component;
    if (!after.contains(id)) return after.invalidate_planar();
    const std::size_t i0 = before.index_of(id);
    const std::size_t i1 = after.index_of(id);
    if (before.component(i0) != after.component(i1)) return after.invalidate_planar();
    for (std::size_t k = 0; k < after.size(); ++k) {
      if (k == i1) continue;
      const std::string& other = after.component(k).id;
      const Integer old = before.contains(other) ? before.lk(i0, before.index_of(other)) : Integer(0);
      if (after.lk(i1, k) != old) return after.invalidate_planar();
    }
    for (std::size_t k = 0; k < before.size(); ++k)
      if (k != i0 && !after.contains(before.component(k).id) && before.lk(i0, k) != 0)
        return after.invalidate_planar();
  }
}

// Adds eps * v vᵀ to the linking matrix (framings on the diagonal).
void add_outer(Diagram& d, int eps, const std::vector<Integer>& v) {
  for (std::size_t i = 0; i < d.size(); ++i) {
    if (v[i] == 0) continue;
    d.set_framing(i, d.component(i).framing + eps * v[i] * v[i]);
    for (std::size_t j = i + 1; j < d.size(); ++j)
      if (v[j] != 0) d.set_lk(i, j, d.lk(i, j) + eps * v[i] * v[j]);
  }
}

std::string fresh_id(const Diagram& d, const std::string& stem) {
  for (long k = 1;; ++k) {
    std::string id = stem + std::to_string(k);
    if (!d.contains(id)) return id;
  }
}

}  // namespace

Diagram twist_region(const Diagram& d, int eps, const Multiplicity& m) {
  require_eps(eps);
  const auto v = dense(d, m);
  require_not_dotted(d, v, "a twist region");
  Diagram out = d;
  add_outer(out, eps, v);
  settle_planar(d, out);
  return out;
}

Diagram blow_up(const Diagram& d, int eps, const Multiplicity& m, const std::string& id) {
  require_eps(eps);
  const auto v = dense(d, m);
  require_not_dotted(d, v, "a blow-up circle");
  Diagram out = d;
  add_outer(out, eps, v);
  out.add_component(Component::framed_knot(id.empty() ? fresh_id(d, "e") : id, eps, true), v);
  settle_planar(d, out);
  return out;
}

Diagram blow_down(const Diagram& d, std::string_view e) {
  const std::size_t k = d.index_of(e);
  const Component& c = d.component(k);
  if (!c.framed() || (c.framing != 1 && c.framing != -1))
    throw PreconditionError("blow-down needs a ±1-framed 2-handle, " + c.id + " is not");
  if (!c.unknot) throw PreconditionError("blow-down of " + c.id + " needs an unknot certificate");
  std::vector<Integer> l(d.size());
  for (std::size_t i = 0; i < d.size(); ++i) l[i] = i == k ? Integer(0) : d.lk(i, k);
  require_not_dotted(d, l, "a blow-down circle");
  Diagram out = d;
  add_outer(out, -static_cast<int>(c.framing.get_si()), l);
  out.remove_component(k);
  settle_planar(d, out);
  return out;
}

Diagram handle_slide(const Diagram& d, std::string_view i_id, std::string_view j_id, int s) {
  require_eps(s);
  const std::size_t i = d.index_of(i_id);
  const std::size_t j = d.index_of(j_id);
  if (i == j) throw PreconditionError("cannot slide a handle over itself");
  if (d.component(j).dotted()) throw PreconditionError("cannot slide over dotted circle " + d.component(j).id);
  if (d.component(i).dotted()) throw PreconditionError("dotted circle " + d.component(i).id + " cannot slide over a 2-handle");
  Diagram out = d;
  const Integer fj = d.component(j).framing;
  out.set_framing(i, d.component(i).framing + fj + 2 * s * d.lk(i, j));
  for (std::size_t k = 0; k < d.size(); ++k)
    if (k != i && k != j) out.set_lk(i, k, d.lk(i, k) + s * d.lk(j, k));
  out.set_lk(i, j, d.lk(i, j) + s * fj);
  settle_planar(d, out);
  return out;
}

Diagram cancel_12(const Diagram& d, std::string_view u_id, std::string_view h_id) {
  const std::size_t u = d.index_of(u_id);
  const std::size_t h = d.index_of(h_id);
  if (!d.component(u).dotted()) throw PreconditionError(std::string(u_id) + " is not a dotted circle");
  if (!d.component(h).framed()) throw PreconditionError(std::string(h_id) + " is not a 2-handle");
  if (abs(d.lk(u, h)) != 1)
    throw PreconditionError("cancellation needs |lk(" + std::string(u_id) + "," + std::string(h_id) + ")| = 1");
  for (std::size_t k = 0; k < d.size(); ++k)
    if (k != u && k != h && d.lk(u, k) != 0)
      throw PreconditionError(d.component(k).id + " still links dotted circle " + std::string(u_id) + "; slide it off first");
  Diagram out = d;
  out.remove_component(std::max(u, h));
  out.remove_component(std::min(u, h));
  settle_planar(d, out);
  return out;
}

Diagram add_12_pair(const Diagram& d, const std::string& u, const std::string& h, const Integer& f, int l,
                    const Multiplicity& m, bool u_unknot, bool h_unknot) {
  require_eps(l);
  const auto v = dense(d, m);
  Diagram out = d;
  out.add_component(Component::dotted_circle(u, u_unknot));
  std::vector<Integer> links = v;
  links.push_back(l);
  out.add_component(Component::framed_knot(h, f, h_unknot), links);
  settle_planar(d, out);
  return out;
}

Diagram add_23_pair(const Diagram& d, const std::string& delta, const Multiplicity& m) {
  const auto v = dense(d, m);
  Diagram out = d;
  out.add_component(Component::framed_knot(delta, 0, true), v);
  out.set_three_handles(d.three_handles() + 1);
  settle_planar(d, out);
  return out;
}

Diagram cancel_23(const Diagram& d, std::string_view e) {
  const std::size_t k = d.index_of(e);
  const Component& c = d.component(k);
  if (!c.framed() || c.framing != 0) throw PreconditionError("2/3 cancellation needs a 0-framed 2-handle, " + c.id + " is not");
  if (!c.unknot) throw PreconditionError("2/3 cancellation of " + c.id + " needs an unknot certificate");
  for (std::size_t i = 0; i < d.size(); ++i)
    if (i != k && d.lk(i, k) != 0)
      throw PreconditionError(c.id + " still links " + d.component(i).id + " (lk = " + d.lk(i, k).get_str() + ")");
  if (d.three_handles() < 1) throw PreconditionError("no 3-handle available to cancel " + c.id);
  Diagram out = d;
  out.remove_component(k);
  out.set_three_handles(d.three_handles() - 1);
  settle_planar(d, out);
  return out;
}

}  // namespace kirbykit
