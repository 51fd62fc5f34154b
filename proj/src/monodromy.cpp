#include "kirbykit/monodromy.hpp"

#include <algorithm>
#include <tuple>

#include "kirbykit/error.hpp"

namespace kirbykit {

SL2Mat SL2Mat::from_entries(const Integer& p, const Integer& q, const Integer& r, const Integer& s) {
  if (p * s - q * r != 1) throw PreconditionError("matrix does not have determinant 1");
  return {p, q, r, s};
}

SL2Mat SL2Mat::inverse() const { return {s, -q, -r, p}; }
SL2Mat SL2Mat::operator-() const { return {-p, -q, -r, -s}; }

IntMatrix SL2Mat::to_matrix() const {
  IntMatrix m(2, 2);
  m(0, 0) = p;
  m(0, 1) = q;
  m(1, 0) = r;
  m(1, 1) = s;
  return m;
}

std::string SL2Mat::to_string() const {
  return "[[" + p.get_str() + "," + q.get_str() + "],[" + r.get_str() + "," + s.get_str() + "]]";
}

SL2Mat operator*(const SL2Mat& x, const SL2Mat& y) {
  return {x.p * y.p + x.q * y.r, x.p * y.q + x.q * y.s, x.r * y.p + x.s * y.r, x.r * y.q + x.s * y.s};
}

bool operator<(const SL2Mat& x, const SL2Mat& y) {
  return std::tie(x.p, x.q, x.r, x.s) < std::tie(y.p, y.q, y.r, y.s);
}

SL2Mat generator_a() { return {1, -1, 0, 1}; }
SL2Mat generator_b() { return {1, 0, 1, 1}; }

SL2Mat evaluate(std::string_view word) {
  SL2Mat m;
  for (std::size_t i = 0; i < word.size(); ++i) {
    switch (word[i]) {
      case 'a': m = m * generator_a(); break;
      case 'A': m = m * generator_a().inverse(); break;
      case 'b': m = m * generator_b(); break;
      case 'B': m = m * generator_b().inverse(); break;
      default:
        throw ParseError("twist word letter '" + std::string(1, word[i]) + "' at position " + std::to_string(i + 1) +
                         " is not one of a A b B");
    }
  }
  return m;
}

TwistWord inverse_word(std::string_view word) {
  TwistWord out(word.rbegin(), word.rend());
  for (char& c : out) {
    if (c != 'a' && c != 'A' && c != 'b' && c != 'B') throw ParseError(std::string("bad twist word letter '") + c + "'");
    c = c == 'a' ? 'A' : c == 'A' ? 'a' : c == 'b' ? 'B' : 'b';
  }
  return out;
}

std::string to_string(MonodromyClass c) {
  switch (c) {
    case MonodromyClass::elliptic: return "elliptic";
    case MonodromyClass::parabolic: return "parabolic";
    case MonodromyClass::hyperbolic: return "hyperbolic";
  }
  return "?";
}

OrderAndClass order_and_class(const SL2Mat& a) {
  OrderAndClass out;
  out.trace = a.trace();
  SL2Mat power = a;
  // finite orders in SL(2,Z) are 1, 2, 3, 4, 6
  for (int k = 1; k <= 12; ++k, power = power * a)
    if (power == SL2Mat::identity()) {
      out.order = k;
      return out;
    }
  out.kind = abs(out.trace) == 2 ? MonodromyClass::parabolic : MonodromyClass::hyperbolic;
  return out;
}

namespace {

struct Commutant {
  SL2Mat base;  // A' = (A - pI) / g, not of determinant 1 in general
  Integer g, t, d, disc;
};

// x I + y A' as a 2×2 integer matrix.
SL2Mat combine(const Commutant& c, const Integer& x, const Integer& y) {
  return {x + y * c.base.p, y * c.base.q, y * c.base.r, x + y * c.base.s};
}

Commutant commutant(const SL2Mat& a) {
  Commutant c;
  Integer g;
  mpz_gcd(g.get_mpz_t(), a.q.get_mpz_t(), a.r.get_mpz_t());
  const Integer diff = a.s - a.p;
  mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), diff.get_mpz_t());
  c.g = g;
  c.base = {0, a.q / g, a.r / g, diff / g};
  c.t = c.base.p + c.base.s;
  c.d = c.base.p * c.base.s - c.base.q * c.base.r;
  c.disc = c.t * c.t - 4 * c.d;
  return c;
}

bool is_scalar(const SL2Mat& a) { return a.q == 0 && a.r == 0 && a.p == a.s; }

Integer max_entry(const SL2Mat& m) { return std::max({abs(m.p), abs(m.q), abs(m.r), abs(m.s)}); }

}  // namespace

Centralizer centralizer(const SL2Mat& a) {
  Centralizer out;
  if (is_scalar(a)) return out;
  const Commutant c = commutant(a);
  // det(xI + yA') = x² + t xy + d y² = 1; with u = 2x + t y this is u² - disc·y² = 4.
  if (c.disc < 0) {
    out.kind = Centralizer::Kind::finite;
    for (long y = -2; y <= 2; ++y)
      for (long u = -2; u <= 2; ++u) {
        const Integer lhs = Integer(u * u) - c.disc * (y * y);
        const Integer num = u - c.t * y;
        if (lhs == 4 && mpz_even_p(num.get_mpz_t())) out.elements.push_back(combine(c, num / 2, y));
      }
    std::sort(out.elements.begin(), out.elements.end());
    return out;
  }
  out.kind = Centralizer::Kind::cyclic;
  out.elements = {-SL2Mat::identity(), SL2Mat::identity()};
  std::sort(out.elements.begin(), out.elements.end());
  if (c.disc == 0) {
    // A' - (t/2) I is nilpotent and primitive; y is unconstrained.
    out.generator = combine(c, 1 - c.t / 2, 1);
    return out;
  }
  // Hyperbolic: A itself is (p, g) in these coordinates, so the fundamental
  // solution has 0 < y ≤ g.
  for (Integer y = 1; y <= c.g; ++y) {
    const Integer w = 4 + c.disc * y * y;
    if (!mpz_perfect_square_p(w.get_mpz_t())) continue;
    Integer u;
    mpz_sqrt(u.get_mpz_t(), w.get_mpz_t());
    const Integer num = u - c.t * y;
    if (!mpz_even_p(num.get_mpz_t())) continue;
    out.generator = combine(c, num / 2, y);
    return out;
  }
  throw VerificationError("no fundamental solution found for hyperbolic " + a.to_string());
}

bool Centralizer::contains(const SL2Mat& b) const {
  switch (kind) {
    case Kind::everything: return true;
    case Kind::finite: return std::find(elements.begin(), elements.end(), b) != elements.end();
    case Kind::cyclic: break;
  }
  // b = ±G^k: walk powers until the trace passes |tr b| (hyperbolic) or the entries
  // pass those of b (parabolic).
  const SL2Mat& gen = *generator;
  const Integer limit = max_entry(b);
  for (const SL2Mat& step : {gen, gen.inverse()}) {
    SL2Mat power;
    for (Integer k = 0;; ++k) {
      if (power == b || -power == b) return true;
      power = power * step;
      if (abs(power.trace()) > 2 * limit + 2 || k > 2 * limit + 2) break;
    }
  }
  return false;
}

std::vector<SL2Mat> Centralizer::in_box(long bound) const {
  std::vector<SL2Mat> out;
  auto keep = [&](const SL2Mat& m) {
    if (max_entry(m) <= bound) out.push_back(m);
  };
  switch (kind) {
    case Kind::everything:
      for (long p = -bound; p <= bound; ++p)
        for (long q = -bound; q <= bound; ++q)
          for (long r = -bound; r <= bound; ++r)
            for (long s = -bound; s <= bound; ++s)
              if (p * s - q * r == 1) out.push_back({p, q, r, s});
      break;
    case Kind::finite:
      for (const auto& m : elements) keep(m);
      break;
    case Kind::cyclic: {
      // Traces of G^k grow without bound (hyperbolic) and entries grow linearly
      // (parabolic), so both walks stop.
      const SL2Mat& gen = *generator;
      for (const SL2Mat& step : {gen, gen.inverse()}) {
        SL2Mat power;
        for (long k = 0;; ++k) {
          keep(power);
          keep(-power);
          power = power * step;
          if (abs(power.trace()) > 2 * bound + 2 || k > 2 * bound + 2) break;
        }
      }
      std::sort(out.begin(), out.end());
      out.erase(std::unique(out.begin(), out.end()), out.end());
      break;
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::string Centralizer::describe() const {
  switch (kind) {
    case Kind::everything: return "all of SL(2,Z)";
    case Kind::finite: {
      std::string s = "finite, order " + std::to_string(elements.size()) + ":";
      for (const auto& m : elements) s += " " + m.to_string();
      return s;
    }
    case Kind::cyclic: return "{±G^k : k ∈ Z}, G = " + generator->to_string();
  }
  return "?";
}

std::vector<SL2Mat> centralizer_bruteforce(const SL2Mat& a, long bound) {
  if (bound < 0) throw PreconditionError("search bound must be nonnegative");
  // the empty box still reports the identity, which commutes with everything
  if (bound == 0) return {SL2Mat::identity()};
  std::vector<SL2Mat> out;
  auto consider = [&](const SL2Mat& b) {
    if (a * b == b * a) out.push_back(b);
  };
  for (long p = -bound; p <= bound; ++p)
    for (long q = -bound; q <= bound; ++q)
      for (long r = -bound; r <= bound; ++r) {
        if (p != 0) {
          // ps = 1 + qr fixes s
          const long num = 1 + q * r;
          if (num % p == 0 && std::abs(num / p) <= bound) consider({p, q, r, num / p});
        } else if (q * r == -1) {
          for (long s = -bound; s <= bound; ++s) consider({p, q, r, s});
        }
      }
  std::sort(out.begin(), out.end());
  return out;
}

AbelianGroup torus_bundle_h1(const SL2Mat& a) {
  IntMatrix m = a.to_matrix();
  m(0, 0) -= 1;
  m(1, 1) -= 1;
  AbelianGroup g = cokernel(m);
  g.free_rank += 1;
  return g;
}

std::string to_string(ExtensionVerdict v) {
  return v == ExtensionVerdict::extends_known ? "extends_known" : "obstructed_unknown";
}

ExtensionVerdict extension_verdict(const SL2Mat& a, const SL2Mat& b) {
  if (!(a * b == b * a))
    throw PreconditionError(b.to_string() + " does not commute with the monodromy " + a.to_string());
  const SL2Mat id = SL2Mat::identity();
  if (b == id || b == -id || b == a || b == -a) return ExtensionVerdict::extends_known;
  return ExtensionVerdict::obstructed_unknown;
}

}  // namespace kirbykit
