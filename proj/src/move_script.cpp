// Text form of move scripts, replay, inversion, and the composite moves.

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

#include "kirbykit/moves.hpp"

namespace kirbykit {

namespace {

std::string sign_str(int s) { return s > 0 ? "+1" : "-1"; }

std::string mult_str(const Multiplicity& m) {
  std::string out = "(";
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (i) out += ',';
    out += m[i].first + ':' + m[i].second.get_str();
  }
  return out + ')';
}

std::string at_str(const std::vector<std::size_t>& at) {
  std::string out;
  for (std::size_t i = 0; i < at.size(); ++i) out += (i ? "," : "") + std::to_string(at[i]);
  return out;
}

const std::map<MoveKind, std::string>& kind_names() {
  static const std::map<MoveKind, std::string> names{
      {MoveKind::twist, "twist"},       {MoveKind::blowup, "blowup"},   {MoveKind::blowdown, "blowdown"},
      {MoveKind::slide, "slide"},       {MoveKind::cancel12, "cancel12"}, {MoveKind::add12, "add12"},
      {MoveKind::add23, "add23"},       {MoveKind::cancel23, "cancel23"}};
  return names;
}

// Parsing helpers accept only the canonical spelling, so text round-trips exactly.
int parse_sign(std::string_view s) {
  if (s == "+1") return 1;
  if (s == "-1") return -1;
  throw ParseError("expected +1 or -1, got '" + std::string(s) + "'");
}

Integer parse_int(std::string_view s) {
  Integer v;
  if (s.empty() || v.set_str(std::string(s), 10) != 0 || v.get_str() != s)
    throw ParseError("expected an integer, got '" + std::string(s) + "'");
  return v;
}

std::size_t parse_index(std::string_view s) {
  const Integer v = parse_int(s);
  if (v < 0 || !v.fits_ulong_p()) throw ParseError("expected a position, got '" + std::string(s) + "'");
  return v.get_ui();
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= s.size(); ++i)
    if (i == s.size() || s[i] == sep) {
      out.push_back(s.substr(start, i - start));
      start = i + 1;
    }
  return out;
}

std::string_view parenthesized(std::string_view s) {
  if (s.size() < 2 || s.front() != '(' || s.back() != ')')
    throw ParseError("expected a parenthesized list, got '" + std::string(s) + "'");
  return s.substr(1, s.size() - 2);
}

Multiplicity parse_mult(std::string_view s) {
  Multiplicity m;
  const std::string_view body = parenthesized(s);
  if (body.empty()) return m;
  for (auto entry : split(body, ',')) {
    const auto colon = entry.find(':');
    if (colon == std::string_view::npos || colon == 0)
      throw ParseError("multiplicity entries look like id:count, got '" + std::string(entry) + "'");
    m.emplace_back(std::string(entry.substr(0, colon)), parse_int(entry.substr(colon + 1)));
  }
  return m;
}

// key=value tokens after the positional ones; each key at most once.
std::map<std::string, std::string_view> parse_options(const std::vector<std::string_view>& tok, std::size_t from,
                                                      const std::set<std::string>& allowed) {
  std::map<std::string, std::string_view> out;
  for (std::size_t k = from; k < tok.size(); ++k) {
    const auto eq = tok[k].find('=');
    if (eq == std::string_view::npos) throw ParseError("unexpected token '" + std::string(tok[k]) + "'");
    std::string key(tok[k].substr(0, eq));
    if (!allowed.count(key)) throw ParseError("unknown option '" + key + "'");
    if (!out.emplace(key, tok[k].substr(eq + 1)).second) throw ParseError("option '" + key + "' given twice");
  }
  return out;
}

std::string_view need(const std::map<std::string, std::string_view>& opts, const std::string& key) {
  const auto it = opts.find(key);
  if (it == opts.end() || it->second.empty()) throw ParseError("missing " + key + "=");
  return it->second;
}

std::vector<std::size_t> parse_at(std::string_view s) {
  std::vector<std::size_t> out;
  for (auto part : split(s, ',')) out.push_back(parse_index(part));
  return out;
}

}  // namespace

std::string to_string(const Move& m) {
  std::ostringstream os;
  os << kind_names().at(m.kind);
  switch (m.kind) {
    case MoveKind::twist:
      os << ' ' << sign_str(m.eps) << " m=" << mult_str(m.m);
      break;
    case MoveKind::blowup:
      os << ' ' << sign_str(m.eps) << " m=" << mult_str(m.m);
      if (!m.a.empty()) os << " as=" << m.a;
      break;
    case MoveKind::blowdown:
    case MoveKind::cancel23:
      os << ' ' << m.a;
      break;
    case MoveKind::slide:
      os << ' ' << m.a << " over " << m.b << " s=" << sign_str(m.eps);
      break;
    case MoveKind::cancel12:
      os << " u=" << m.a << " h=" << m.b;
      break;
    case MoveKind::add12:
      os << " u=" << m.a << " h=" << m.b << " f=" << m.framing.get_str() << " l=" << sign_str(m.eps)
         << " m=" << mult_str(m.m);
      if (!m.certified.empty()) {
        os << " unknot=(";
        for (std::size_t i = 0; i < m.certified.size(); ++i) os << (i ? "," : "") << m.certified[i];
        os << ')';
      }
      break;
    case MoveKind::add23:
      os << " delta=" << m.a;
      if (!m.m.empty()) os << " m=" << mult_str(m.m);
      break;
  }
  if (!m.at.empty()) os << " at=" << at_str(m.at);
  return os.str();
}

Move parse_move(std::string_view line) {
  std::vector<std::string_view> tok;
  for (auto t : split(line, ' '))
    if (!t.empty()) tok.push_back(t);
  if (tok.empty()) throw ParseError("empty move");
  Move m;
  const auto it = std::find_if(kind_names().begin(), kind_names().end(), [&](const auto& kv) { return kv.second == tok[0]; });
  if (it == kind_names().end()) throw ParseError("unknown move '" + std::string(tok[0]) + "'");
  m.kind = it->first;
  auto positional = [&](std::size_t n) {
    if (tok.size() < n + 1) throw ParseError(std::string(tok[0]) + " needs " + std::to_string(n) + " argument(s)");
  };
  switch (m.kind) {
    case MoveKind::twist:
    case MoveKind::blowup: {
      positional(1);
      m.eps = parse_sign(tok[1]);
      const auto opts = parse_options(tok, 2, m.kind == MoveKind::twist ? std::set<std::string>{"m"}
                                                                         : std::set<std::string>{"m", "as", "at"});
      m.m = parse_mult(need(opts, "m"));
      if (opts.count("as")) m.a = std::string(need(opts, "as"));
      if (opts.count("at")) m.at = parse_at(need(opts, "at"));
      break;
    }
    case MoveKind::blowdown:
    case MoveKind::cancel23:
      positional(1);
      if (tok.size() != 2) throw ParseError(std::string(tok[0]) + " takes exactly one component");
      m.a = std::string(tok[1]);
      break;
    case MoveKind::slide: {
      positional(3);
      if (tok[2] != "over") throw ParseError("expected: slide <i> over <j> s=+1|-1");
      m.a = std::string(tok[1]);
      m.b = std::string(tok[3]);
      const auto opts = parse_options(tok, 4, {"s"});
      m.eps = parse_sign(need(opts, "s"));
      break;
    }
    case MoveKind::cancel12: {
      const auto opts = parse_options(tok, 1, {"u", "h"});
      m.a = std::string(need(opts, "u"));
      m.b = std::string(need(opts, "h"));
      break;
    }
    case MoveKind::add12: {
      const auto opts = parse_options(tok, 1, {"u", "h", "f", "l", "m", "unknot", "at"});
      m.a = std::string(need(opts, "u"));
      m.b = std::string(need(opts, "h"));
      m.framing = parse_int(need(opts, "f"));
      m.eps = parse_sign(need(opts, "l"));
      m.m = parse_mult(need(opts, "m"));
      if (opts.count("unknot"))
        for (auto id : split(parenthesized(need(opts, "unknot")), ',')) {
          if (id != m.a && id != m.b) throw ParseError("unknot=() may only list u and h");
          m.certified.emplace_back(id);
        }
      if (opts.count("at")) m.at = parse_at(need(opts, "at"));
      break;
    }
    case MoveKind::add23: {
      const auto opts = parse_options(tok, 1, {"delta", "m", "at"});
      m.a = std::string(need(opts, "delta"));
      if (opts.count("m")) m.m = parse_mult(need(opts, "m"));
      if (opts.count("at")) m.at = parse_at(need(opts, "at"));
      break;
    }
  }
  if (to_string(m) != std::string(line.substr(0, line.find_last_not_of(" \t\r") + 1)))
    throw ParseError("non-canonical spelling; expected '" + to_string(m) + "'");
  return m;
}

MoveScript parse_script(std::string_view text) {
  MoveScript s;
  std::size_t line_no = 0;
  for (auto raw : split(text, '\n')) {
    ++line_no;
    std::string_view line = raw.substr(0, raw.find('#'));
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string_view::npos) continue;
    line = line.substr(first);
    line = line.substr(0, line.find_last_not_of(" \t\r") + 1);
    try {
      s.moves.push_back(parse_move(line));
    } catch (const ParseError& e) {
      throw ParseError(e.what(), line_no);
    }
  }
  return s;
}

std::string to_string(const MoveScript& s) {
  std::string out;
  for (const auto& m : s.moves) out += to_string(m) + '\n';
  return out;
}

Diagram apply_move(const Diagram& d, const Move& m) {
  Diagram out;
  switch (m.kind) {
    case MoveKind::twist:
      return twist_region(d, m.eps, m.m);
    case MoveKind::blowup:
      out = blow_up(d, m.eps, m.m, m.a);
      if (m.at.size() > 1) throw PreconditionError("blowup takes one insertion position");
      if (!m.at.empty()) out.move_component(out.size() - 1, m.at[0]);
      return out;
    case MoveKind::blowdown:
      return blow_down(d, m.a);
    case MoveKind::slide:
      return handle_slide(d, m.a, m.b, m.eps);
    case MoveKind::cancel12:
      return cancel_12(d, m.a, m.b);
    case MoveKind::add12: {
      const auto certified = [&](const std::string& id) {
        return std::find(m.certified.begin(), m.certified.end(), id) != m.certified.end();
      };
      out = add_12_pair(d, m.a, m.b, m.framing, m.eps, m.m, certified(m.a), certified(m.b));
      if (m.at.size() == 2) {
        // place the component with the smaller target first; the other is then last
        const std::size_t pu = m.at[0], ph = m.at[1];
        if (pu == ph || std::max(pu, ph) >= out.size()) throw PreconditionError("bad add12 positions");
        if (pu < ph) {
          out.move_component(out.size() - 2, pu);
          out.move_component(out.size() - 1, ph);
        } else {
          out.move_component(out.size() - 1, ph);
          out.move_component(out.size() - 1, pu);
        }
      } else if (!m.at.empty()) {
        throw PreconditionError("add12 takes two insertion positions");
      }
      return out;
    }
    case MoveKind::add23:
      out = add_23_pair(d, m.a, m.m);
      if (m.at.size() > 1) throw PreconditionError("add23 takes one insertion position");
      if (!m.at.empty()) out.move_component(out.size() - 1, m.at[0]);
      return out;
    case MoveKind::cancel23:
      return cancel_23(d, m.a);
  }
  throw PreconditionError("unknown move");
}

Trace replay_trace(const Diagram& d, const MoveScript& s) {
  Trace t;
  t.states.push_back(d);
  for (std::size_t i = 0; i < s.moves.size(); ++i) {
    try {
      t.states.push_back(apply_move(t.states.back(), s.moves[i]));
    } catch (const Error& e) {
      t.error = MoveError(i, std::string(e.what()) + " [" + to_string(s.moves[i]) + "]");
      break;
    }
  }
  return t;
}

Diagram replay(const Diagram& d, const MoveScript& s) {
  Diagram cur = d;
  for (std::size_t i = 0; i < s.moves.size(); ++i) {
    try {
      cur = apply_move(cur, s.moves[i]);
    } catch (const Error& e) {
      throw MoveError(i, std::string(e.what()) + " [" + to_string(s.moves[i]) + "]");
    }
  }
  return cur;
}

namespace {

Multiplicity row_of(const Diagram& d, std::size_t k, const std::set<std::size_t>& skip = {}) {
  Multiplicity m;
  for (std::size_t i = 0; i < d.size(); ++i)
    if (i != k && !skip.count(i) && d.lk(i, k) != 0) m.emplace_back(d.component(i).id, d.lk(i, k));
  return m;
}

// The move undoing `m`, which takes `before` to `after`.
Move undo(const Diagram& before, const Diagram& after, const Move& m) {
  Move r;
  switch (m.kind) {
    case MoveKind::twist:
      r = m;
      r.eps = -m.eps;
      return r;
    case MoveKind::blowup:
    case MoveKind::add23:
    case MoveKind::add12: {
      // the added components are exactly those missing from `before`
      std::vector<std::string> added;
      for (const auto& c : after.components())
        if (!before.contains(c.id)) added.push_back(c.id);
      if (m.kind == MoveKind::add12) {
        r.kind = MoveKind::cancel12;
        r.a = m.a;
        r.b = m.b;
      } else {
        r.kind = m.kind == MoveKind::blowup ? MoveKind::blowdown : MoveKind::cancel23;
        r.a = added.at(0);
      }
      return r;
    }
    case MoveKind::blowdown: {
      const std::size_t k = before.index_of(m.a);
      r.kind = MoveKind::blowup;
      r.eps = static_cast<int>(before.component(k).framing.get_si());
      r.m = row_of(before, k);
      r.a = m.a;
      if (k + 1 != before.size()) r.at = {k};
      return r;
    }
    case MoveKind::slide:
      r = m;
      r.eps = -m.eps;
      return r;
    case MoveKind::cancel12: {
      const std::size_t u = before.index_of(m.a);
      const std::size_t h = before.index_of(m.b);
      r.kind = MoveKind::add12;
      r.a = m.a;
      r.b = m.b;
      r.framing = before.component(h).framing;
      r.eps = static_cast<int>(before.lk(u, h).get_si());
      r.m = row_of(before, h, {u});
      if (before.component(u).unknot) r.certified.push_back(m.a);
      if (before.component(h).unknot) r.certified.push_back(m.b);
      if (!(u + 2 == before.size() && h + 1 == before.size())) r.at = {u, h};
      return r;
    }
    case MoveKind::cancel23: {
      const std::size_t k = before.index_of(m.a);
      r.kind = MoveKind::add23;
      r.a = m.a;
      if (k + 1 != before.size()) r.at = {k};
      return r;
    }
  }
  throw PreconditionError("unknown move");
}

}  // namespace

MoveScript inverse(const Diagram& d, const MoveScript& s) {
  const Trace t = replay_trace(d, s);
  if (t.error) throw *t.error;
  MoveScript inv;
  for (std::size_t i = s.moves.size(); i-- > 0;) inv.moves.push_back(undo(t.states[i], t.states[i + 1], s.moves[i]));
  return inv;
}

}  // namespace kirbykit
