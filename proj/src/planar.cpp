#include "kirbykit/planar.hpp"

#include <algorithm>
#include <numeric>
#include <optional>
#include <set>

#include "kirbykit/error.hpp"

namespace kirbykit::planar {

namespace {

class UnionFind {
 public:
  explicit UnionFind(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }
  std::size_t find(std::size_t x) {
    while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
    return x;
  }
  void unite(std::size_t a, std::size_t b) { parent_[find(a)] = find(b); }

 private:
  std::vector<std::size_t> parent_;
};

bool is_in_slot(const Crossing& x, int slot) { return slot == kUnderIn || slot == x.over_in_slot(); }

int through_slot(int in_slot) {
  if (in_slot == kUnderIn) return kUnderOut;
  return in_slot == 1 ? 3 : 1;
}

// Seifert smoothing: the incoming under-strand continues along the outgoing
// over-strand and vice versa.
int smoothing_slot(const Crossing& x, int in_slot) {
  return in_slot == kUnderIn ? x.over_out_slot() : kUnderOut;
}

}  // namespace

Graph::Graph(std::vector<Crossing> crossings, std::vector<int> edge_component,
             std::vector<std::string> component_ids)
    : crossings_(std::move(crossings)),
      edge_component_(std::move(edge_component)),
      component_ids_(std::move(component_ids)) {
  index_ports();
}

void Graph::index_ports() {
  const std::size_t n = edge_component_.size();
  head_.assign(n, Port{});
  tail_.assign(n, Port{});
  for (std::size_t c = 0; c < crossings_.size(); ++c) {
    const Crossing& x = crossings_[c];
    if (x.sign != 1 && x.sign != -1) throw ParseError("crossing sign must be + or -");
    for (int s = 0; s < 4; ++s) {
      const int e = x.edge[static_cast<std::size_t>(s)];
      if (e < 0 || static_cast<std::size_t>(e) >= n) throw ParseError("crossing refers to an unknown arc");
      Port& p = is_in_slot(x, s) ? head_[static_cast<std::size_t>(e)] : tail_[static_cast<std::size_t>(e)];
      if (p.crossing >= 0) throw ParseError("arc orientation is inconsistent with the crossing signs");
      p = Port{static_cast<int>(c), s};
    }
  }
  for (std::size_t e = 0; e < n; ++e)
    if (head_[e].crossing < 0 || tail_[e].crossing < 0)
      throw ParseError("arc orientation is inconsistent with the crossing signs");
}

int Graph::next(int edge) const {
  const Port h = head(edge);
  const Crossing& x = crossings_[static_cast<std::size_t>(h.crossing)];
  return x.edge[static_cast<std::size_t>(through_slot(h.slot))];
}

int Graph::under_component(int crossing) const {
  return component_of(crossings_.at(static_cast<std::size_t>(crossing)).edge[kUnderIn]);
}

int Graph::over_component(int crossing) const {
  return component_of(crossings_.at(static_cast<std::size_t>(crossing)).edge[1]);
}

std::vector<std::vector<int>> Graph::component_edges() const {
  std::vector<std::vector<int>> out(component_ids_.size());
  std::vector<bool> seen(edge_count(), false);
  for (std::size_t start = 0; start < edge_count(); ++start) {
    if (seen[start]) continue;
    auto& list = out[static_cast<std::size_t>(component_of(static_cast<int>(start)))];
    if (!list.empty()) throw Error("component runs along two disjoint arc cycles");
    int e = static_cast<int>(start);
    do {
      seen[static_cast<std::size_t>(e)] = true;
      list.push_back(e);
      e = next(e);
    } while (e != static_cast<int>(start));
  }
  return out;
}

Graph build_graph(const PlanarData& pd) {
  std::map<long, int> label_id;
  for (const auto& line : pd.lines)
    for (const auto& x : line.crossings)
      for (long a : x.arcs) label_id.emplace(a, 0);
  {
    int k = 0;
    for (auto& [label, id] : label_id) id = k++;
  }
  const std::size_t n_edges = label_id.size();
  std::vector<int> uses(n_edges, 0);
  std::vector<Crossing> crossings;
  std::vector<std::size_t> owner_line;
  for (std::size_t li = 0; li < pd.lines.size(); ++li)
    for (const auto& x : pd.lines[li].crossings) {
      Crossing c;
      for (int s = 0; s < 4; ++s) {
        c.edge[static_cast<std::size_t>(s)] = label_id.at(x.arcs[static_cast<std::size_t>(s)]);
        ++uses[static_cast<std::size_t>(c.edge[static_cast<std::size_t>(s)])];
      }
      if (x.sign != 1 && x.sign != -1) throw ParseError("crossing sign must be + or -");
      c.sign = x.sign;
      crossings.push_back(c);
      owner_line.push_back(li);
    }
  std::vector<long> label_of(n_edges);
  for (const auto& [label, id] : label_id) label_of[static_cast<std::size_t>(id)] = label;
  for (std::size_t e = 0; e < n_edges; ++e)
    if (uses[e] != 2)
      throw ParseError("arc " + std::to_string(label_of[e]) + " appears " + std::to_string(uses[e]) +
                       " times in the PD code (expected exactly 2)");

  UnionFind uf(n_edges);
  for (const auto& c : crossings) {
    uf.unite(static_cast<std::size_t>(c.edge[0]), static_cast<std::size_t>(c.edge[2]));
    uf.unite(static_cast<std::size_t>(c.edge[1]), static_cast<std::size_t>(c.edge[3]));
  }

  std::vector<std::string> ids;
  for (const auto& line : pd.lines) {
    if (std::find(ids.begin(), ids.end(), line.component) != ids.end())
      throw ParseError("component " + line.component + " has more than one pd line");
    ids.push_back(line.component);
  }

  std::map<std::size_t, int> class_owner;
  for (std::size_t i = 0; i < crossings.size(); ++i) {
    const std::size_t cls = uf.find(static_cast<std::size_t>(crossings[i].edge[0]));
    const int li = static_cast<int>(owner_line[i]);
    auto [it, inserted] = class_owner.emplace(cls, li);
    if (!inserted && it->second != li)
      throw ParseError("an arc cycle is claimed by both " + ids[static_cast<std::size_t>(it->second)] +
                       " and " + ids[static_cast<std::size_t>(li)]);
  }
  std::vector<int> classes_of_line(ids.size(), 0);
  for (const auto& [cls, li] : class_owner) ++classes_of_line[static_cast<std::size_t>(li)];
  for (std::size_t li = 0; li < ids.size(); ++li)
    if (classes_of_line[li] > 1)
      throw ParseError("crossings listed for " + ids[li] + " lie on more than one closed curve");

  std::set<std::size_t> unclaimed;
  for (std::size_t e = 0; e < n_edges; ++e)
    if (!class_owner.count(uf.find(e))) unclaimed.insert(uf.find(e));
  if (!unclaimed.empty()) {
    std::vector<int> empty_lines;
    for (std::size_t li = 0; li < ids.size(); ++li)
      if (classes_of_line[li] == 0) empty_lines.push_back(static_cast<int>(li));
    if (unclaimed.size() == 1 && empty_lines.size() == 1)
      class_owner.emplace(*unclaimed.begin(), empty_lines.front());
    else
      throw ParseError("cannot attribute over-only arcs to a component; list one under-crossing per component");
  }

  std::vector<int> edge_component(n_edges);
  std::map<std::size_t, std::vector<int>> class_edges;
  for (std::size_t e = 0; e < n_edges; ++e) {
    edge_component[e] = class_owner.at(uf.find(e));
    class_edges[uf.find(e)].push_back(static_cast<int>(e));
  }
  // Consecutive labels along each component; edge ids are label-sorted already.
  std::vector<int> succ(n_edges);
  for (const auto& [cls, edges] : class_edges)
    for (std::size_t k = 0; k < edges.size(); ++k)
      succ[static_cast<std::size_t>(edges[k])] = edges[(k + 1) % edges.size()];

  for (auto& c : crossings) {
    const auto at = [&](int s) { return c.edge[static_cast<std::size_t>(s)]; };
    std::string where = "X(" + std::to_string(label_of[static_cast<std::size_t>(at(0))]) + "," +
                        std::to_string(label_of[static_cast<std::size_t>(at(1))]) + "," +
                        std::to_string(label_of[static_cast<std::size_t>(at(2))]) + "," +
                        std::to_string(label_of[static_cast<std::size_t>(at(3))]) + ")";
    if (succ[static_cast<std::size_t>(at(0))] != at(2))
      throw ParseError("under-strand of " + where + " does not run from a to the next arc c");
    const bool d_to_b = succ[static_cast<std::size_t>(at(3))] == at(1);
    const bool b_to_d = succ[static_cast<std::size_t>(at(1))] == at(3);
    if (!d_to_b && !b_to_d) throw ParseError("over-strand arcs of " + where + " are not consecutive");
    if (c.sign > 0 && !d_to_b) throw ParseError("sign of " + where + " contradicts the orientation (should be -)");
    if (c.sign < 0 && !b_to_d) throw ParseError("sign of " + where + " contradicts the orientation (should be +)");
  }

  return Graph(std::move(crossings), std::move(edge_component), std::move(ids));
}

PlanarData to_planar_data(const Graph& g) {
  const auto comps = g.component_edges();
  std::vector<long> label(g.edge_count());
  long next_label = 1;
  for (const auto& edges : comps)
    for (int e : edges) label[static_cast<std::size_t>(e)] = next_label++;
  PlanarData pd;
  for (const auto& id : g.component_ids()) pd.lines.push_back(PDLine{id, {}});
  // Crossings are listed along each under-strand in order of travel.
  for (std::size_t ci = 0; ci < comps.size(); ++ci)
    for (int e : comps[ci]) {
      const Port h = g.head(e);
      if (h.slot != kUnderIn) continue;
      const Crossing& x = g.crossings()[static_cast<std::size_t>(h.crossing)];
      PDCrossing out;
      for (int s = 0; s < 4; ++s)
        out.arcs[static_cast<std::size_t>(s)] = label[static_cast<std::size_t>(x.edge[static_cast<std::size_t>(s)])];
      out.sign = x.sign;
      pd.lines[ci].crossings.push_back(out);
    }
  return pd;
}

std::map<std::pair<int, int>, Integer> crossing_linking(const Graph& g) {
  std::map<std::pair<int, int>, Integer> twice;
  for (std::size_t c = 0; c < g.crossings().size(); ++c) {
    int a = g.under_component(static_cast<int>(c));
    int b = g.over_component(static_cast<int>(c));
    if (a == b) continue;
    if (a > b) std::swap(a, b);
    twice[{a, b}] += g.crossings()[c].sign;
  }
  std::map<std::pair<int, int>, Integer> out;
  for (auto& [k, v] : twice) {
    if (!mpz_even_p(v.get_mpz_t())) throw ParseError("odd number of crossings between two components");
    out[k] = v / 2;
  }
  return out;
}

Graph extract_knot(const Graph& g, std::string_view component) {
  const auto& ids = g.component_ids();
  const auto it = std::find(ids.begin(), ids.end(), component);
  if (it == ids.end()) throw PreconditionError("component " + std::string(component) + " has no planar data");
  const int target = static_cast<int>(it - ids.begin());
  const auto comps = g.component_edges();
  const auto& edges = comps[static_cast<std::size_t>(target)];

  std::vector<bool> keep(g.crossings().size(), false);
  for (std::size_t c = 0; c < g.crossings().size(); ++c)
    keep[c] = g.under_component(static_cast<int>(c)) == target && g.over_component(static_cast<int>(c)) == target;

  // Every kept crossing is entered twice along the component; arcs between
  // consecutive kept entries become the new edges.
  std::vector<int> new_id(g.edge_count(), -1);
  int count = 0;
  if (!edges.empty()) {
    std::size_t start = 0;
    bool any = false;
    for (std::size_t k = 0; k < edges.size(); ++k)
      if (keep[static_cast<std::size_t>(g.tail(edges[k]).crossing)]) {
        start = k;
        any = true;
        break;
      }
    if (any) {
      int current = -1;
      for (std::size_t step = 0; step < edges.size(); ++step) {
        const int e = edges[(start + step) % edges.size()];
        if (keep[static_cast<std::size_t>(g.tail(e).crossing)]) current = count++;
        new_id[static_cast<std::size_t>(e)] = current;
      }
    }
  }
  std::vector<Crossing> crossings;
  for (std::size_t c = 0; c < g.crossings().size(); ++c) {
    if (!keep[c]) continue;
    Crossing x = g.crossings()[c];
    for (auto& e : x.edge) e = new_id[static_cast<std::size_t>(e)];
    crossings.push_back(x);
  }
  return Graph(std::move(crossings), std::vector<int>(static_cast<std::size_t>(count), 0),
               {std::string(component)});
}

std::vector<std::vector<int>> seifert_circles(const Graph& g) {
  std::vector<std::vector<int>> circles;
  std::vector<bool> seen(g.edge_count(), false);
  for (std::size_t start = 0; start < g.edge_count(); ++start) {
    if (seen[start]) continue;
    std::vector<int> circle;
    int e = static_cast<int>(start);
    do {
      seen[static_cast<std::size_t>(e)] = true;
      circle.push_back(e);
      const Port h = g.head(e);
      const Crossing& x = g.crossings()[static_cast<std::size_t>(h.crossing)];
      e = x.edge[static_cast<std::size_t>(smoothing_slot(x, h.slot))];
    } while (e != static_cast<int>(start));
    circles.push_back(std::move(circle));
  }
  return circles;
}

std::vector<std::vector<Port>> faces(const Graph& g) {
  const std::size_t n = g.crossings().size();
  std::vector<std::array<bool, 4>> seen(n, {false, false, false, false});
  std::vector<std::vector<Port>> out;
  for (std::size_t c = 0; c < n; ++c)
    for (int s = 0; s < 4; ++s) {
      if (seen[c][static_cast<std::size_t>(s)]) continue;
      std::vector<Port> face;
      Port p{static_cast<int>(c), s};
      while (!seen[static_cast<std::size_t>(p.crossing)][static_cast<std::size_t>(p.slot)]) {
        seen[static_cast<std::size_t>(p.crossing)][static_cast<std::size_t>(p.slot)] = true;
        face.push_back(p);
        const int e = g.crossings()[static_cast<std::size_t>(p.crossing)].edge[static_cast<std::size_t>(p.slot)];
        const Port other = g.tail(e) == p ? g.head(e) : g.tail(e);
        p = Port{other.crossing, (other.slot + 3) % 4};
      }
      out.push_back(std::move(face));
    }
  return out;
}

namespace {

// Per-edge Seifert circle index.
std::vector<int> circle_index(const Graph& g, const std::vector<std::vector<int>>& circles) {
  std::vector<int> idx(g.edge_count(), -1);
  for (std::size_t i = 0; i < circles.size(); ++i)
    for (int e : circles[i]) idx[static_cast<std::size_t>(e)] = static_cast<int>(i);
  return idx;
}

struct VogelSite {
  int first = -1;
  int second = -1;
  bool face_left = true;  // face lies left of both edges' orientation
};

std::optional<VogelSite> find_vogel_site(const Graph& g) {
  const auto circles = seifert_circles(g);
  const auto circle_of = circle_index(g, circles);
  for (const auto& face : faces(g)) {
    for (int orient = 0; orient < 2; ++orient) {
      const bool along = orient == 0;
      int first = -1;
      for (const Port& p : face) {
        const int e = g.crossings()[static_cast<std::size_t>(p.crossing)].edge[static_cast<std::size_t>(p.slot)];
        if ((g.tail(e) == p) != along) continue;
        if (first < 0) {
          first = e;
        } else if (circle_of[static_cast<std::size_t>(e)] != circle_of[static_cast<std::size_t>(first)]) {
          return VogelSite{first, e, along};
        }
      }
    }
  }
  return std::nullopt;
}

// Reidemeister II move pushing edge `upper` over edge `lower` across the face
// they share, which lies on the same side (left or right) of both.
Graph push_over(const Graph& g, const VogelSite& site) {
  std::vector<Crossing> xs = g.crossings();
  std::vector<int> comp(g.edge_count());
  for (std::size_t e = 0; e < g.edge_count(); ++e) comp[e] = g.component_of(static_cast<int>(e));
  std::vector<std::string> ids = g.component_ids();

  const int lower = site.first;
  const int upper = site.second;
  const int lower_mid = static_cast<int>(comp.size());
  const int lower_end = lower_mid + 1;
  const int upper_mid = lower_mid + 2;
  const int upper_end = lower_mid + 3;
  comp.push_back(comp[static_cast<std::size_t>(lower)]);
  comp.push_back(comp[static_cast<std::size_t>(lower)]);
  comp.push_back(comp[static_cast<std::size_t>(upper)]);
  comp.push_back(comp[static_cast<std::size_t>(upper)]);

  const Port lower_head = g.head(lower);
  const Port upper_head = g.head(upper);
  xs[static_cast<std::size_t>(lower_head.crossing)].edge[static_cast<std::size_t>(lower_head.slot)] = lower_end;
  xs[static_cast<std::size_t>(upper_head.crossing)].edge[static_cast<std::size_t>(upper_head.slot)] = upper_end;

  // The lower edge meets the new crossings A then B; the upper edge meets B then A.
  Crossing a, b;
  if (site.face_left) {
    a.edge = {lower, upper_mid, lower_mid, upper_end};
    a.sign = -1;
    b.edge = {lower_mid, upper_mid, lower_end, upper};
    b.sign = 1;
  } else {
    a.edge = {lower, upper_end, lower_mid, upper_mid};
    a.sign = 1;
    b.edge = {lower_mid, upper, lower_end, upper_mid};
    b.sign = -1;
  }
  xs.push_back(a);
  xs.push_back(b);
  return Graph(std::move(xs), std::move(comp), std::move(ids));
}

// Cyclic sequence of crossings met along a Seifert circle.
std::vector<int> crossings_along(const Graph& g, const std::vector<int>& circle) {
  std::vector<int> out;
  for (int e : circle) out.push_back(g.head(e).crossing);
  return out;
}

// True when `sub` occurs in `cyc` in the same cyclic order.
bool same_cyclic_order(const std::vector<int>& cyc, const std::vector<int>& sub) {
  if (sub.size() <= 2) return true;
  std::vector<int> filtered;
  const std::set<int> members(sub.begin(), sub.end());
  for (int x : cyc)
    if (members.count(x)) filtered.push_back(x);
  if (filtered.size() != sub.size()) return false;
  const auto it = std::find(filtered.begin(), filtered.end(), sub.front());
  std::rotate(filtered.begin(), it, filtered.end());
  return filtered == sub;
}

}  // namespace

Braid to_braid(const Graph& knot) {
  if (knot.component_ids().size() != 1) throw PreconditionError("braid conversion needs a knot");
  if (knot.crossings().empty()) return Braid{1, {}};

  Graph g = knot;
  const std::size_t limit = 64 + 16 * knot.crossings().size() * knot.crossings().size();
  for (std::size_t iter = 0;; ++iter) {
    if (iter > limit) throw Error("Vogel reduction did not terminate");
    auto site = find_vogel_site(g);
    if (!site) break;
    g = push_over(g, *site);
  }

  const auto circles = seifert_circles(g);
  const auto circle_of = circle_index(g, circles);
  const std::size_t n = circles.size();
  std::vector<std::set<int>> adj(n);
  std::vector<std::pair<int, int>> ends(g.crossings().size());
  for (std::size_t c = 0; c < g.crossings().size(); ++c) {
    const Crossing& x = g.crossings()[c];
    const int p = circle_of[static_cast<std::size_t>(x.edge[kUnderIn])];
    const int q = circle_of[static_cast<std::size_t>(x.edge[static_cast<std::size_t>(x.over_in_slot())])];
    if (p == q) throw Error("Seifert graph has a loop");
    adj[static_cast<std::size_t>(p)].insert(q);
    adj[static_cast<std::size_t>(q)].insert(p);
    ends[c] = {p, q};
  }
  // In closed-braid position the Seifert graph is a path of nested circles.
  int start = -1;
  for (std::size_t i = 0; i < n; ++i) {
    if (adj[i].size() > 2) throw Error("Seifert circles are not in closed-braid position");
    if (adj[i].size() <= 1 && start < 0) start = static_cast<int>(i);
  }
  if (start < 0) throw Error("Seifert circles are not in closed-braid position");
  std::vector<int> level(n, -1);
  std::vector<int> order;
  for (int cur = start, prev = -1; cur >= 0;) {
    level[static_cast<std::size_t>(cur)] = static_cast<int>(order.size());
    order.push_back(cur);
    int nxt = -1;
    for (int nb : adj[static_cast<std::size_t>(cur)])
      if (nb != prev) nxt = nb;
    prev = cur;
    cur = nxt;
    if (cur >= 0 && level[static_cast<std::size_t>(cur)] >= 0) throw Error("Seifert graph has a cycle");
  }
  if (order.size() != n) throw Error("Seifert graph is disconnected");

  std::vector<int> column(g.crossings().size());
  for (std::size_t c = 0; c < g.crossings().size(); ++c)
    column[c] = std::min(level[static_cast<std::size_t>(ends[c].first)], level[static_cast<std::size_t>(ends[c].second)]);

  auto along = [&](int lvl) { return crossings_along(g, circles[static_cast<std::size_t>(order[static_cast<std::size_t>(lvl)])]); };
  auto filter_col = [&](const std::vector<int>& seq, int col) {
    std::vector<int> out;
    for (int c : seq)
      if (column[static_cast<std::size_t>(c)] == col) out.push_back(c);
    return out;
  };

  // Merge per-circle cyclic orders into one cyclic order of all crossings.
  std::vector<int> global = n == 2 ? along(0) : along(1);
  for (int lvl = 2; lvl + 1 < static_cast<int>(n); ++lvl) {
    const auto seq = along(lvl);
    if (!same_cyclic_order(global, filter_col(seq, lvl - 1)))
      throw Error("inconsistent crossing order between nested Seifert circles");
    // Insert column-lvl crossings right after the preceding column-(lvl-1) crossing.
    std::size_t first_anchor = 0;
    while (column[static_cast<std::size_t>(seq[first_anchor])] != lvl - 1) ++first_anchor;
    int anchor = seq[first_anchor];
    std::vector<int> pending;
    for (std::size_t k = 1; k <= seq.size(); ++k) {
      const int c = seq[(first_anchor + k) % seq.size()];
      if (column[static_cast<std::size_t>(c)] == lvl) {
        pending.push_back(c);
        continue;
      }
      auto pos = std::find(global.begin(), global.end(), anchor);
      global.insert(pos + 1, pending.begin(), pending.end());
      pending.clear();
      anchor = c;
    }
  }
  if (n >= 3 && !same_cyclic_order(global, filter_col(along(0), 0)))
    throw Error("inconsistent crossing order between nested Seifert circles");

  Braid b;
  b.strands = static_cast<int>(n);
  for (int c : global) b.word.push_back((column[static_cast<std::size_t>(c)] + 1) * g.crossings()[static_cast<std::size_t>(c)].sign);
  return b;
}

IntMatrix braid_seifert_matrix(const Braid& b) {
  const auto& x = b.word;
  const std::size_t len = x.size();
  // next occurrence of the same generator index, or len when none
  std::vector<std::size_t> nxt(len, len);
  for (std::size_t i = 0; i < len; ++i)
    for (std::size_t j = i + 1; j < len; ++j)
      if (std::abs(x[j]) == std::abs(x[i])) {
        nxt[i] = j;
        break;
      }
  std::vector<std::size_t> gens;
  for (std::size_t i = 0; i < len; ++i)
    if (nxt[i] < len) gens.push_back(i);

  IntMatrix v(gens.size(), gens.size());
  auto sgn_of = [](int s) { return s > 0 ? 1 : -1; };
  for (std::size_t a = 0; a < gens.size(); ++a) {
    const std::size_t i = gens[a];
    const std::size_t hi = nxt[i];
    v(a, a) = -(sgn_of(x[i]) + sgn_of(x[hi])) / 2;
    for (std::size_t bb = a + 1; bb < gens.size(); ++bb) {
      const std::size_t j = gens[bb];
      const std::size_t hj = nxt[j];
      if (hi < j || hj < hi) continue;  // disjoint or nested loops
      if (hi == j) {
        // consecutive loops of one column sharing crossing j
        if (x[j] > 0)
          v(bb, a) = 1;
        else
          v(a, bb) = -1;
        continue;
      }
      // interleaved i < j < hi < hj in adjacent columns
      const int ci = std::abs(x[i]);
      const int cj = std::abs(x[j]);
      if (ci - cj == 1)
        v(bb, a) = -1;
      else if (cj - ci == 1)
        v(a, bb) = 1;
    }
  }
  return v;
}

IntMatrix seifert_matrix(const Graph& knot) { return braid_seifert_matrix(to_braid(knot)); }

namespace {

// det of a matrix whose entries are integer polynomials a + b t, given as
// coefficient pairs, recovered exactly by evaluation and interpolation.
LaurentPoly linear_pencil_det(const IntMatrix& constant, const IntMatrix& linear) {
  const std::vector<Integer> c = pencil_determinant(constant, linear);
  LaurentPoly out;
  for (std::size_t d = 0; d < c.size(); ++d) out += LaurentPoly::monomial(c[d], static_cast<long>(d));
  return out;
}

}  // namespace

LaurentPoly alexander_from_seifert(const IntMatrix& v) {
  if (!v.square()) throw PreconditionError("Seifert matrix must be square");
  if (v.rows() == 0) return LaurentPoly(1);
  const IntMatrix vt = v.transposed();
  IntMatrix neg_vt(vt.rows(), vt.cols());
  for (std::size_t i = 0; i < vt.rows(); ++i)
    for (std::size_t j = 0; j < vt.cols(); ++j) neg_vt(i, j) = -vt(i, j);
  return normalize_symmetric(linear_pencil_det(v, neg_vt));
}

LaurentPoly fox_alexander(const Graph& knot) {
  if (knot.component_ids().size() != 1) throw PreconditionError("Fox calculus oracle needs a knot");
  const std::size_t n = knot.crossings().size();
  if (n == 0) return LaurentPoly(1);

  // Wirtinger generators: arcs running over crossings, i.e. edges joined through
  // the over-strand.
  UnionFind uf(knot.edge_count());
  for (const auto& x : knot.crossings()) uf.unite(static_cast<std::size_t>(x.edge[1]), static_cast<std::size_t>(x.edge[3]));
  std::map<std::size_t, std::size_t> gen;
  for (std::size_t e = 0; e < knot.edge_count(); ++e) gen.emplace(uf.find(e), gen.size());
  std::vector<std::size_t> gen_of(knot.edge_count());
  {
    std::size_t k = 0;
    for (auto& [root, id] : gen) id = k++;
    for (std::size_t e = 0; e < knot.edge_count(); ++e) gen_of[e] = gen.at(uf.find(e));
  }
  if (gen.size() != n) throw Error("Wirtinger presentation has an unexpected number of generators");

  // Relation x_out = x_over^s x_in x_over^-s, abelianized Fox derivatives
  // (scaled by a unit so every entry is a polynomial a + b t).
  IntMatrix c0(n, n), c1(n, n);
  for (std::size_t r = 0; r < n; ++r) {
    const Crossing& x = knot.crossings()[r];
    const std::size_t in = gen_of[static_cast<std::size_t>(x.edge[kUnderIn])];
    const std::size_t out = gen_of[static_cast<std::size_t>(x.edge[kUnderOut])];
    const std::size_t over = gen_of[static_cast<std::size_t>(x.edge[1])];
    if (x.sign > 0) {
      c0(r, over) += 1;
      c1(r, over) -= 1;
      c1(r, in) += 1;
      c0(r, out) -= 1;
    } else {
      c0(r, over) -= 1;
      c1(r, over) += 1;
      c0(r, in) += 1;
      c1(r, out) -= 1;
    }
  }
  std::vector<std::size_t> keep(n - 1);
  std::iota(keep.begin(), keep.end(), 0);
  return normalize_symmetric(linear_pencil_det(c0.select(keep, keep), c1.select(keep, keep)));
}

Graph build_strand_diagram(int strands, const std::vector<StrandCrossing>& crossings, Closure closure,
                           const std::string& prefix) {
  if (strands < 1) throw PreconditionError("need at least one strand");
  if (closure == Closure::plat && strands % 2 != 0) throw PreconditionError("plat closure needs an even strand count");
  // Wire endpoints: crossing ports are 4*c + p with p = 0 SE, 1 NE, 2 NW, 3 SW
  // (counterclockwise); boundary points follow.
  const int nc = static_cast<int>(crossings.size());
  const int left0 = 4 * nc;
  const int right0 = left0 + strands;
  const int total = right0 + strands;
  std::vector<std::vector<int>> wire(static_cast<std::size_t>(total));
  auto join = [&](int a, int b) {
    wire[static_cast<std::size_t>(a)].push_back(b);
    wire[static_cast<std::size_t>(b)].push_back(a);
  };
  std::vector<int> dangling(static_cast<std::size_t>(strands));
  for (int p = 0; p < strands; ++p) dangling[static_cast<std::size_t>(p)] = left0 + p;
  for (int c = 0; c < nc; ++c) {
    const int i = crossings[static_cast<std::size_t>(c)].position;
    if (i < 0 || i + 1 >= strands) throw PreconditionError("crossing position out of range");
    join(dangling[static_cast<std::size_t>(i)], 4 * c + 3);
    join(dangling[static_cast<std::size_t>(i + 1)], 4 * c + 2);
    dangling[static_cast<std::size_t>(i)] = 4 * c + 0;
    dangling[static_cast<std::size_t>(i + 1)] = 4 * c + 1;
  }
  for (int p = 0; p < strands; ++p) join(dangling[static_cast<std::size_t>(p)], right0 + p);
  if (closure == Closure::braid) {
    for (int p = 0; p < strands; ++p) join(left0 + p, right0 + p);
  } else {
    for (int p = 0; p < strands; p += 2) {
      join(left0 + p, left0 + p + 1);
      join(right0 + p, right0 + p + 1);
    }
  }

  // Follow a wire from a crossing port through boundary points to the next port.
  auto follow = [&](int from) {
    int prev = from;
    int cur = wire[static_cast<std::size_t>(from)].front();
    while (cur >= left0) {
      const auto& w = wire[static_cast<std::size_t>(cur)];
      const int nxt = w[0] == prev ? w[1] : w[0];
      prev = cur;
      cur = nxt;
    }
    return cur;
  };
  auto opposite = [](int port) { return (port + 2) % 4; };

  std::vector<int> port_edge(static_cast<std::size_t>(4 * nc), -1);
  std::vector<bool> port_is_tail(static_cast<std::size_t>(4 * nc), false);
  std::vector<int> edge_component;
  int component = 0;
  // Braid closures run left to right, so components start at right-facing ports.
  for (int c = 0; c < nc; ++c)
    for (int p : {0, 1}) {
      const int start = 4 * c + p;
      if (port_edge[static_cast<std::size_t>(start)] >= 0) continue;
      int out = start;
      do {
        const int in = follow(out);
        const int e = static_cast<int>(edge_component.size());
        edge_component.push_back(component);
        port_edge[static_cast<std::size_t>(out)] = e;
        port_is_tail[static_cast<std::size_t>(out)] = true;
        port_edge[static_cast<std::size_t>(in)] = e;
        out = 4 * (in / 4) + opposite(in % 4);
      } while (out != start);
      ++component;
    }
  // Closed loops through boundary points only are crossingless components.
  std::vector<bool> boundary_seen(static_cast<std::size_t>(total), false);
  for (int c = 0; c < nc; ++c)
    for (int p = 0; p < 4; ++p) {
      int prev = 4 * c + p;
      int cur = wire[static_cast<std::size_t>(prev)].front();
      while (cur >= left0 && !boundary_seen[static_cast<std::size_t>(cur)]) {
        boundary_seen[static_cast<std::size_t>(cur)] = true;
        const auto& w = wire[static_cast<std::size_t>(cur)];
        const int nxt = w[0] == prev ? w[1] : w[0];
        prev = cur;
        cur = nxt;
      }
    }
  for (int b = left0; b < total; ++b) {
    if (boundary_seen[static_cast<std::size_t>(b)]) continue;
    int prev = b;
    int cur = b;
    do {
      boundary_seen[static_cast<std::size_t>(cur)] = true;
      const auto& w = wire[static_cast<std::size_t>(cur)];
      const int nxt = w[0] == prev && w.size() > 1 ? w[1] : w[0];
      prev = cur;
      cur = nxt;
    } while (cur != b);
    ++component;
  }

  std::vector<Crossing> xs(static_cast<std::size_t>(nc));
  for (int c = 0; c < nc; ++c) {
    const bool rising_over = crossings[static_cast<std::size_t>(c)].rising_over;
    // ports 3->1 form the rising strand, 2->0 the falling one
    const std::array<int, 2> under = rising_over ? std::array<int, 2>{2, 0} : std::array<int, 2>{3, 1};
    const int under_in = port_is_tail[static_cast<std::size_t>(4 * c + under[0])] ? under[1] : under[0];
    Crossing& x = xs[static_cast<std::size_t>(c)];
    for (int s = 0; s < 4; ++s) x.edge[static_cast<std::size_t>(s)] = port_edge[static_cast<std::size_t>(4 * c + (under_in + s) % 4)];
    const int over_in_port = port_is_tail[static_cast<std::size_t>(4 * c + (under_in + 1) % 4)] ? (under_in + 3) % 4 : (under_in + 1) % 4;
    x.sign = over_in_port == (under_in + 3) % 4 ? 1 : -1;
  }

  std::vector<std::string> ids;
  if (component == 1) {
    ids.push_back(prefix);
  } else {
    for (int k = 1; k <= component; ++k) ids.push_back(prefix + std::to_string(k));
  }
  return Graph(std::move(xs), std::move(edge_component), std::move(ids));
}

Graph braid_closure(const Braid& b, const std::string& prefix) {
  std::vector<StrandCrossing> xs;
  for (int g : b.word) {
    if (g == 0 || std::abs(g) >= b.strands) throw PreconditionError("braid generator out of range");
    // With strands running left to right, a rising over-strand is a negative crossing.
    xs.push_back(StrandCrossing{std::abs(g) - 1, g < 0});
  }
  return build_strand_diagram(b.strands, xs, Closure::braid, prefix);
}

}  // namespace kirbykit::planar
