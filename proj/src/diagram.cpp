#include "kirbykit/diagram.hpp"

#include <algorithm>
#include <charconv>
#include <set>
#include <sstream>

#include "kirbykit/error.hpp"
#include "kirbykit/planar.hpp"

namespace kirbykit {

Component Component::dotted_circle(std::string id, bool unknot) {
  return Component{std::move(id), ComponentKind::dotted, 0, unknot};
}

Component Component::framed_knot(std::string id, Integer framing, bool unknot) {
  return Component{std::move(id), ComponentKind::framed, std::move(framing), unknot};
}

bool PlanarData::covers(std::string_view id) const {
  return std::any_of(lines.begin(), lines.end(), [&](const PDLine& l) { return l.component == id; });
}

std::size_t PlanarData::crossing_count() const {
  std::size_t n = 0;
  for (const auto& l : lines) n += l.crossings.size();
  return n;
}

bool Diagram::contains(std::string_view id) const {
  return std::any_of(components_.begin(), components_.end(), [&](const Component& c) { return c.id == id; });
}

std::size_t Diagram::index_of(std::string_view id) const {
  for (std::size_t i = 0; i < components_.size(); ++i)
    if (components_[i].id == id) return i;
  throw PreconditionError("unknown component '" + std::string(id) + "'");
}

const Integer& Diagram::lk(std::size_t i, std::size_t j) const {
  if (i == j) throw PreconditionError("linking number of a component with itself");
  return lk_.at(i).at(j);
}

void Diagram::set_lk(std::size_t i, std::size_t j, const Integer& value) {
  if (i == j) throw PreconditionError("linking number of a component with itself");
  lk_.at(i).at(j) = value;
  lk_.at(j).at(i) = value;
}

void Diagram::set_framing(std::size_t i, const Integer& framing) {
  Component& c = components_.at(i);
  if (c.dotted() && framing != 0) throw PreconditionError("dotted circle " + c.id + " carries no framing");
  c.framing = framing;
}

void Diagram::add_component(Component c, const std::vector<Integer>& links) {
  if (c.id.empty()) throw PreconditionError("component id must be nonempty");
  if (contains(c.id)) throw PreconditionError("duplicate component id '" + c.id + "'");
  if (c.dotted() && c.framing != 0) throw PreconditionError("dotted circle " + c.id + " carries no framing");
  if (links.size() > components_.size()) throw PreconditionError("too many linking numbers for " + c.id);
  for (auto& row : lk_) row.emplace_back(0);
  lk_.emplace_back(components_.size() + 1, Integer(0));
  components_.push_back(std::move(c));
  const std::size_t k = components_.size() - 1;
  for (std::size_t i = 0; i < links.size(); ++i) set_lk(i, k, links[i]);
}

void Diagram::remove_component(std::size_t i) {
  if (i >= components_.size()) throw PreconditionError("component index out of range");
  components_.erase(components_.begin() + static_cast<std::ptrdiff_t>(i));
  lk_.erase(lk_.begin() + static_cast<std::ptrdiff_t>(i));
  for (auto& row : lk_) row.erase(row.begin() + static_cast<std::ptrdiff_t>(i));
}

void Diagram::move_component(std::size_t from, std::size_t to) {
  if (from >= size() || to >= size()) throw PreconditionError("component index out of range");
  auto shift = [&](auto& v) {
    auto item = std::move(v[from]);
    v.erase(v.begin() + static_cast<std::ptrdiff_t>(from));
    v.insert(v.begin() + static_cast<std::ptrdiff_t>(to), std::move(item));
  };
  shift(components_);
  shift(lk_);
  for (auto& row : lk_) shift(row);
}

void Diagram::set_three_handles(long n) {
  if (n < 0) throw PreconditionError("three-handle count must be nonnegative");
  three_handles_ = n;
}

void Diagram::invalidate_planar() {
  planar_stale_ = true;
  planar_.reset();
}

std::size_t Diagram::dotted_count() const {
  return static_cast<std::size_t>(std::count_if(components_.begin(), components_.end(), [](const Component& c) { return c.dotted(); }));
}

std::size_t Diagram::framed_count() const { return components_.size() - dotted_count(); }

namespace {

// Crossing-derived linking numbers keyed by diagram component indices.
std::map<std::pair<std::size_t, std::size_t>, Integer> planar_links(const Diagram& d, const PlanarData& p) {
  const planar::Graph g = planar::build_graph(p);
  std::vector<std::size_t> index;
  for (const auto& id : g.component_ids()) {
    if (!d.contains(id)) throw ParseError("pd line for unknown component '" + id + "'");
    index.push_back(d.index_of(id));
  }
  std::map<std::pair<std::size_t, std::size_t>, Integer> out;
  for (std::size_t a = 0; a < index.size(); ++a)
    for (std::size_t b = a + 1; b < index.size(); ++b) out[std::minmax(index[a], index[b])] = 0;
  for (const auto& [key, v] : planar::crossing_linking(g))
    out[std::minmax(index[static_cast<std::size_t>(key.first)], index[static_cast<std::size_t>(key.second)])] = v;
  return out;
}

}  // namespace

void Diagram::set_planar(PlanarData p) {
  for (const auto& [key, v] : planar_links(*this, p))
    if (lk(key.first, key.second) != v)
      throw ParseError("linking number of " + components_[key.first].id + " and " + components_[key.second].id +
                       " is " + lk(key.first, key.second).get_str() + " but the crossings give " + v.get_str());
  planar_ = std::move(p);
  planar_stale_ = false;
}

void Diagram::validate() const {
  std::set<std::string> ids;
  for (const auto& c : components_) {
    if (!ids.insert(c.id).second) throw Error("duplicate component id '" + c.id + "'");
    if (c.dotted() && c.framing != 0) throw Error("dotted circle " + c.id + " carries a framing");
  }
  for (std::size_t i = 0; i < size(); ++i)
    for (std::size_t j = 0; j < size(); ++j)
      if (i != j && lk_[i][j] != lk_[j][i]) throw Error("linking numbers are not symmetric");
  if (three_handles_ < 0) throw Error("negative three-handle count");
  if (planar_) {
    for (const auto& [key, v] : planar_links(*this, *planar_))
      if (lk(key.first, key.second) != v)
        throw Error("planar linking of " + components_[key.first].id + " and " + components_[key.second].id +
                    " disagrees with the stored value");
  }
}

namespace {

std::vector<std::string_view> split_ws(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && (s[i] == ' ' || s[i] == '\t' || s[i] == '\r')) ++i;
    std::size_t j = i;
    while (j < s.size() && s[j] != ' ' && s[j] != '\t' && s[j] != '\r') ++j;
    if (j > i) out.push_back(s.substr(i, j - i));
    i = j;
  }
  return out;
}

Integer parse_integer(std::string_view s, std::size_t line) {
  std::string t(s);
  if (!t.empty() && t[0] == '+') t.erase(0, 1);
  Integer v;
  if (t.empty() || v.set_str(t, 10) != 0) throw ParseError("expected an integer, got '" + std::string(s) + "'", line);
  return v;
}

long parse_long(std::string_view s, std::size_t line) {
  long v = 0;
  std::string_view t = s;
  if (!t.empty() && t[0] == '+') t.remove_prefix(1);
  auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), v);
  if (t.empty() || ec != std::errc() || ptr != t.data() + t.size())
    throw ParseError("expected an integer, got '" + std::string(s) + "'", line);
  return v;
}

PDCrossing parse_crossing(std::string_view tok, std::size_t line) {
  if (tok.size() < 4 || tok.substr(0, 2) != "X(" || tok.back() != ')')
    throw ParseError("malformed crossing '" + std::string(tok) + "', expected X(a,b,c,d,+|-)", line);
  std::string_view body = tok.substr(2, tok.size() - 3);
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= body.size(); ++i)
    if (i == body.size() || body[i] == ',') {
      parts.push_back(body.substr(start, i - start));
      start = i + 1;
    }
  if (parts.size() != 5) throw ParseError("crossing '" + std::string(tok) + "' needs four arcs and a sign", line);
  PDCrossing x;
  for (std::size_t k = 0; k < 4; ++k) x.arcs[k] = parse_long(parts[k], line);
  if (parts[4] == "+")
    x.sign = 1;
  else if (parts[4] == "-")
    x.sign = -1;
  else
    throw ParseError("crossing sign must be + or -, got '" + std::string(parts[4]) + "'", line);
  return x;
}

bool valid_id(std::string_view id) {
  return !id.empty() && std::all_of(id.begin(), id.end(), [](char ch) {
    return std::isalnum(static_cast<unsigned char>(ch)) || ch == '_' || ch == '-' || ch == '.' || ch == '\'';
  });
}

}  // namespace

Diagram parse_diagram(std::string_view text) {
  Diagram d;
  struct LkEntry {
    std::string a, b;
    Integer v;
    std::size_t line;
  };
  std::vector<LkEntry> lks;
  PlanarData planar;
  std::size_t planar_line = 0;
  bool has_planar = false;
  bool stale = false;
  bool seen_threehandles = false;

  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t eol = text.find('\n', pos);
    if (eol == std::string_view::npos) eol = text.size();
    std::string_view line = text.substr(pos, eol - pos);
    pos = eol + 1;
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    const auto tok = split_ws(line);
    if (tok.empty()) continue;
    const std::string_view kw = tok[0];

    if (kw == "component") {
      if (tok.size() < 3) throw ParseError("expected: component <id> dotted|framed <int> [unknot]", line_no);
      const std::string id(tok[1]);
      if (!valid_id(id)) throw ParseError("invalid component id '" + id + "'", line_no);
      if (d.contains(id)) throw ParseError("duplicate component id '" + id + "'", line_no);
      std::size_t k = 3;
      Component c;
      if (tok[2] == "dotted") {
        c = Component::dotted_circle(id, false);
        if (k < tok.size() && tok[k] != "unknot") {
          if (parse_integer(tok[k], line_no) != 0)
            throw ParseError("dotted circle " + id + " carries no framing", line_no);
          ++k;
        }
      } else if (tok[2] == "framed") {
        if (tok.size() < 4) throw ParseError("framed component " + id + " needs a framing", line_no);
        c = Component::framed_knot(id, parse_integer(tok[3], line_no));
        k = 4;
      } else {
        throw ParseError("component kind must be dotted or framed, got '" + std::string(tok[2]) + "'", line_no);
      }
      if (k < tok.size() && tok[k] == "unknot") {
        c.unknot = true;
        ++k;
      }
      if (k != tok.size()) throw ParseError("unexpected '" + std::string(tok[k]) + "' after component", line_no);
      d.add_component(std::move(c));
    } else if (kw == "lk") {
      if (tok.size() != 4) throw ParseError("expected: lk <id> <id> <int>", line_no);
      lks.push_back({std::string(tok[1]), std::string(tok[2]), parse_integer(tok[3], line_no), line_no});
    } else if (kw == "pd") {
      if (tok.size() < 2) throw ParseError("expected: pd <id> X(a,b,c,d,s) ...", line_no);
      PDLine pl{std::string(tok[1]), {}};
      if (planar.covers(pl.component)) throw ParseError("second pd line for " + pl.component, line_no);
      for (std::size_t k = 2; k < tok.size(); ++k) pl.crossings.push_back(parse_crossing(tok[k], line_no));
      planar.lines.push_back(std::move(pl));
      has_planar = true;
      if (planar_line == 0) planar_line = line_no;
    } else if (kw == "threehandles") {
      if (tok.size() != 2) throw ParseError("expected: threehandles <n>", line_no);
      if (seen_threehandles) throw ParseError("threehandles given twice", line_no);
      seen_threehandles = true;
      const long n = parse_long(tok[1], line_no);
      if (n < 0) throw ParseError("three-handle count must be nonnegative", line_no);
      d.set_three_handles(n);
    } else if (kw == "meta") {
      if (tok.size() < 2) throw ParseError("expected: meta <key> <value>", line_no);
      // value is the rest of the line, trimmed
      std::string_view rest = line.substr(line.find(tok[1]) + tok[1].size());
      while (!rest.empty() && (rest.front() == ' ' || rest.front() == '\t')) rest.remove_prefix(1);
      while (!rest.empty() && (rest.back() == ' ' || rest.back() == '\t' || rest.back() == '\r')) rest.remove_suffix(1);
      if (tok[1] == "planar") {
        if (rest != "stale") throw ParseError("meta planar only accepts 'stale'", line_no);
        stale = true;
      } else {
        d.set_meta(std::string(tok[1]), std::string(rest));
      }
    } else {
      throw ParseError("unknown keyword '" + std::string(kw) + "'", line_no);
    }
  }

  std::set<std::pair<std::size_t, std::size_t>> given;
  for (const auto& e : lks) {
    if (!d.contains(e.a)) throw ParseError("lk names unknown component '" + e.a + "'", e.line);
    if (!d.contains(e.b)) throw ParseError("lk names unknown component '" + e.b + "'", e.line);
    const std::size_t i = d.index_of(e.a);
    const std::size_t j = d.index_of(e.b);
    if (i == j) throw ParseError("lk of " + e.a + " with itself", e.line);
    if (!given.insert(std::minmax(i, j)).second)
      throw ParseError("lk of " + e.a + " and " + e.b + " given twice", e.line);
    d.set_lk(i, j, e.v);
  }
  if (has_planar) {
    if (stale) throw ParseError("planar data present but marked stale", planar_line);
    std::map<std::pair<std::size_t, std::size_t>, Integer> links;
    try {
      links = planar_links(d, planar);
    } catch (const ParseError& e) {
      throw ParseError(e.what(), planar_line);
    }
    for (const auto& [key, v] : links)
      if (!given.count(key)) d.set_lk(key.first, key.second, v);
    try {
      d.set_planar(std::move(planar));
    } catch (const ParseError& e) {
      throw ParseError(e.what(), planar_line);
    }
  } else if (stale) {
    d.invalidate_planar();
  }
  return d;
}

std::string serialize_diagram(const Diagram& d) {
  std::ostringstream os;
  for (const auto& c : d.components()) {
    os << "component " << c.id << (c.dotted() ? " dotted" : " framed");
    if (c.framed()) os << ' ' << c.framing.get_str();
    if (c.unknot) os << " unknot";
    os << '\n';
  }
  for (std::size_t i = 0; i < d.size(); ++i)
    for (std::size_t j = i + 1; j < d.size(); ++j)
      if (d.lk(i, j) != 0) os << "lk " << d.component(i).id << ' ' << d.component(j).id << ' ' << d.lk(i, j).get_str() << '\n';
  if (d.planar()) {
    for (const auto& l : d.planar()->lines) {
      os << "pd " << l.component;
      for (const auto& x : l.crossings)
        os << " X(" << x.arcs[0] << ',' << x.arcs[1] << ',' << x.arcs[2] << ',' << x.arcs[3] << ','
           << (x.sign > 0 ? '+' : '-') << ')';
      os << '\n';
    }
  }
  if (d.three_handles() != 0) os << "threehandles " << d.three_handles() << '\n';
  for (const auto& [k, v] : d.meta()) os << "meta " << k << ' ' << v << '\n';
  if (d.planar_stale()) os << "meta planar stale\n";
  return os.str();
}

Integer linking_number(const Diagram& d, std::string_view a, std::string_view b) {
  const std::size_t i = d.index_of(a);
  const std::size_t j = d.index_of(b);
  if (i == j) throw PreconditionError("linking number needs two distinct components");
  if (d.planar() && d.planar()->covers(a) && d.planar()->covers(b)) {
    const planar::Graph g = planar::build_graph(*d.planar());
    const auto& ids = g.component_ids();
    int x = static_cast<int>(std::find(ids.begin(), ids.end(), a) - ids.begin());
    int y = static_cast<int>(std::find(ids.begin(), ids.end(), b) - ids.begin());
    if (x > y) std::swap(x, y);
    const auto links = planar::crossing_linking(g);
    const auto it = links.find({x, y});
    return it == links.end() ? Integer(0) : it->second;
  }
  return d.lk(i, j);
}

IntMatrix linking_matrix(const Diagram& d, DottedAs dotted_as) {
  std::vector<std::size_t> keep;
  for (std::size_t i = 0; i < d.size(); ++i)
    if (dotted_as == DottedAs::zero || d.component(i).framed()) keep.push_back(i);
  IntMatrix m(keep.size(), keep.size());
  for (std::size_t a = 0; a < keep.size(); ++a)
    for (std::size_t b = 0; b < keep.size(); ++b)
      m(a, b) = a == b ? d.component(keep[a]).framing : d.lk(keep[a], keep[b]);
  return m;
}

}  // namespace kirbykit
