#include "kirbykit/laurent.hpp"

#include <sstream>

#include "kirbykit/error.hpp"

namespace kirbykit {

LaurentPoly::LaurentPoly(long constant) {
  if (constant != 0) terms_.emplace(0, Integer(constant));
}

LaurentPoly::LaurentPoly(const Integer& constant) {
  if (constant != 0) terms_.emplace(0, constant);
}

LaurentPoly LaurentPoly::monomial(const Integer& c, long e) {
  LaurentPoly p;
  p.add_term(e, c);
  return p;
}

LaurentPoly LaurentPoly::from_coefficients(long lowest, const std::vector<long>& coeffs) {
  LaurentPoly p;
  for (std::size_t i = 0; i < coeffs.size(); ++i) p.add_term(lowest + static_cast<long>(i), coeffs[i]);
  return p;
}

void LaurentPoly::add_term(long e, const Integer& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (inserted) return;
  it->second += c;
  if (it->second == 0) terms_.erase(it);
}

Integer LaurentPoly::coefficient(long e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Integer(0) : it->second;
}

long LaurentPoly::min_degree() const {
  if (terms_.empty()) throw PreconditionError("degree of the zero polynomial");
  return terms_.begin()->first;
}

long LaurentPoly::max_degree() const {
  if (terms_.empty()) throw PreconditionError("degree of the zero polynomial");
  return terms_.rbegin()->first;
}

Integer LaurentPoly::evaluate(const Integer& at) const {
  if (at == 0 && !terms_.empty() && terms_.begin()->first < 0)
    throw PreconditionError("evaluating a negative power at zero");
  mpq_class sum = 0;
  for (const auto& [e, c] : terms_) {
    mpz_class pw;
    const Integer base = abs(at);
    mpz_pow_ui(pw.get_mpz_t(), base.get_mpz_t(), static_cast<unsigned long>(e < 0 ? -e : e));
    if (at < 0 && (e % 2 != 0)) pw = -pw;
    if (e >= 0)
      sum += mpq_class(c * pw);
    else {
      mpq_class term(c, pw);
      term.canonicalize();  // pw may be negative; gmp arithmetic needs a positive denominator
      sum += term;
    }
  }
  if (sum.get_den() != 1) throw PreconditionError("non-integral Laurent value");
  return sum.get_num();
}

Integer LaurentPoly::at_one() const {
  Integer s = 0;
  for (const auto& [e, c] : terms_) s += c;
  return s;
}

LaurentPoly LaurentPoly::inverted() const {
  LaurentPoly p;
  for (const auto& [e, c] : terms_) p.terms_.emplace(-e, c);
  return p;
}

LaurentPoly LaurentPoly::shifted(long k) const {
  LaurentPoly p;
  for (const auto& [e, c] : terms_) p.terms_.emplace(e + k, c);
  return p;
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly p;
  for (const auto& [e, c] : terms_) p.terms_.emplace(e, -c);
  return p;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  LaurentPoly p;
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) p.add_term(ea + eb, ca * cb);
  return p;
}

std::string LaurentPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    Integer mag = abs(c);
    if (first) {
      if (c < 0) os << '-';
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (e == 0) {
      os << mag.get_str();
      continue;
    }
    if (mag != 1) os << mag.get_str() << '*';
    os << 't';
    if (e != 1) os << '^' << e;
  }
  return os.str();
}

std::optional<LaurentPoly> try_normalize_symmetric(const LaurentPoly& p) {
  if (p.is_zero()) return p;
  const long lo = p.min_degree();
  const long hi = p.max_degree();
  if ((lo + hi) % 2 != 0) return std::nullopt;
  LaurentPoly q = p.shifted(-(lo + hi) / 2);
  if (!(q == q.inverted())) return std::nullopt;
  if (q.coefficient(q.max_degree()) < 0) q = -q;
  return q;
}

LaurentPoly normalize_symmetric(const LaurentPoly& p) {
  auto q = try_normalize_symmetric(p);
  if (!q) throw PreconditionError("no unit multiple of " + p.to_string() + " is symmetric");
  return *q;
}

LaurentPoly interpolate_integer_polynomial(const std::vector<Integer>& values) {
  const std::size_t n = values.size();
  // Newton divided differences at nodes 0..n-1.
  std::vector<mpq_class> coef(n);
  for (std::size_t i = 0; i < n; ++i) coef[i] = mpq_class(values[i]);
  for (std::size_t level = 1; level < n; ++level)
    for (std::size_t i = n - 1; i >= level; --i) {
      coef[i] = (coef[i] - coef[i - 1]) / mpq_class(static_cast<long>(level));
      if (i == level) break;
    }
  // Expand sum coef[k] * prod_{j<k} (t - j) into monomials.
  std::vector<mpq_class> poly(n, mpq_class(0));
  std::vector<mpq_class> basis{mpq_class(1)};
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t d = 0; d < basis.size(); ++d) poly[d] += coef[k] * basis[d];
    std::vector<mpq_class> next(basis.size() + 1, mpq_class(0));
    for (std::size_t d = 0; d < basis.size(); ++d) {
      next[d + 1] += basis[d];
      next[d] -= basis[d] * static_cast<long>(k);
    }
    basis = std::move(next);
  }
  LaurentPoly out;
  for (std::size_t d = 0; d < n; ++d) {
    mpq_class c = poly[d];
    c.canonicalize();
    if (c.get_den() != 1) throw PreconditionError("interpolated polynomial is not integral");
    out += LaurentPoly::monomial(c.get_num(), static_cast<long>(d));
  }
  return out;
}

}  // namespace kirbykit
