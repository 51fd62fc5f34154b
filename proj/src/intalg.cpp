#include "kirbykit/intalg.hpp"

#include <algorithm>
#include <cstdint>
#include <sstream>
#include <utility>

#include "kirbykit/error.hpp"

namespace kirbykit {

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols, Integer(0)) {}

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long>> rows) {
  rows_ = rows.size();
  cols_ = rows_ == 0 ? 0 : rows.begin()->size();
  data_.reserve(rows_ * cols_);
  for (const auto& row : rows) {
    if (row.size() != cols_) throw PreconditionError("ragged matrix literal");
    for (long x : row) data_.emplace_back(x);
  }
}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::transposed() const {
  IntMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

bool IntMatrix::symmetric() const {
  if (!square()) return false;
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = i + 1; j < cols_; ++j)
      if ((*this)(i, j) != (*this)(j, i)) return false;
  return true;
}

bool IntMatrix::diagonal() const {
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j)
      if (i != j && (*this)(i, j) != 0) return false;
  return true;
}

IntMatrix IntMatrix::select(const std::vector<std::size_t>& row_idx,
                            const std::vector<std::size_t>& col_idx) const {
  IntMatrix s(row_idx.size(), col_idx.size());
  for (std::size_t i = 0; i < row_idx.size(); ++i)
    for (std::size_t j = 0; j < col_idx.size(); ++j) s(i, j) = (*this)(row_idx[i], col_idx[j]);
  return s;
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols_ != b.rows_) throw PreconditionError("matrix product dimension mismatch");
  IntMatrix c(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Integer& x = a(i, k);
      if (x == 0) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) c(i, j) += x * b(k, j);
    }
  return c;
}

IntMatrix operator+(const IntMatrix& a, const IntMatrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw PreconditionError("matrix sum dimension mismatch");
  IntMatrix c = a;
  for (std::size_t i = 0; i < c.data_.size(); ++i) c.data_[i] += b.data_[i];
  return c;
}

IntMatrix operator-(const IntMatrix& a, const IntMatrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw PreconditionError("matrix difference dimension mismatch");
  IntMatrix c = a;
  for (std::size_t i = 0; i < c.data_.size(); ++i) c.data_[i] -= b.data_[i];
  return c;
}

bool operator==(const IntMatrix& a, const IntMatrix& b) {
  return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
}

void IntMatrix::swap_rows(std::size_t i, std::size_t j) {
  if (i == j) return;
  for (std::size_t k = 0; k < cols_; ++k) std::swap((*this)(i, k), (*this)(j, k));
}

void IntMatrix::swap_cols(std::size_t i, std::size_t j) {
  if (i == j) return;
  for (std::size_t k = 0; k < rows_; ++k) std::swap((*this)(k, i), (*this)(k, j));
}

void IntMatrix::add_row_multiple(std::size_t i, std::size_t j, const Integer& k) {
  if (k == 0) return;
  for (std::size_t c = 0; c < cols_; ++c) (*this)(i, c) += k * (*this)(j, c);
}

void IntMatrix::add_col_multiple(std::size_t i, std::size_t j, const Integer& k) {
  if (k == 0) return;
  for (std::size_t r = 0; r < rows_; ++r) (*this)(r, i) += k * (*this)(r, j);
}

void IntMatrix::negate_row(std::size_t i) {
  for (std::size_t c = 0; c < cols_; ++c) (*this)(i, c) = -(*this)(i, c);
}

std::string IntMatrix::to_string() const {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < rows_; ++i) {
    if (i) os << ',';
    os << '[';
    for (std::size_t j = 0; j < cols_; ++j) {
      if (j) os << ',';
      os << (*this)(i, j).get_str();
    }
    os << ']';
  }
  os << ']';
  return os.str();
}

Integer AbelianGroup::order() const {
  if (free_rank > 0) return 0;
  Integer n = 1;
  for (const auto& d : torsion) n *= d;
  return n;
}

std::string AbelianGroup::to_string() const {
  if (trivial()) return "0";
  std::string out;
  auto append = [&out](const std::string& s) {
    if (!out.empty()) out += " ⊕ ";
    out += s;
  };
  for (std::size_t i = 0; i < free_rank; ++i) append("Z");
  for (const auto& d : torsion) append("Z/" + d.get_str());
  return out;
}

std::vector<Integer> SmithForm::invariant_factors() const {
  std::vector<Integer> out;
  for (std::size_t i = 0; i < std::min(d.rows(), d.cols()); ++i) out.push_back(d(i, i));
  return out;
}

namespace {

// Locates the nonzero entry of smallest absolute value in the trailing block
// starting at (t, t); row-major scan, first minimum wins.
bool find_pivot(const IntMatrix& a, std::size_t t, std::size_t& pi, std::size_t& pj) {
  bool found = false;
  Integer best;
  for (std::size_t i = t; i < a.rows(); ++i)
    for (std::size_t j = t; j < a.cols(); ++j) {
      const Integer& x = a(i, j);
      if (x == 0) continue;
      Integer ax = abs(x);
      if (!found || ax < best) {
        best = ax;
        pi = i;
        pj = j;
        found = true;
      }
    }
  return found;
}

}  // namespace

SmithForm smith_normal_form(const IntMatrix& m) {
  const std::size_t r = m.rows();
  const std::size_t c = m.cols();
  IntMatrix d = m;
  IntMatrix u = IntMatrix::identity(r);
  IntMatrix v = IntMatrix::identity(c);

  const std::size_t steps = std::min(r, c);
  for (std::size_t t = 0; t < steps; ++t) {
    for (;;) {
      std::size_t pi = 0, pj = 0;
      if (!find_pivot(d, t, pi, pj)) return {std::move(u), std::move(d), std::move(v)};
      d.swap_rows(t, pi);
      u.swap_rows(t, pi);
      d.swap_cols(t, pj);
      v.swap_cols(t, pj);

      bool dirty = false;
      for (std::size_t i = t + 1; i < r; ++i) {
        if (d(i, t) == 0) continue;
        Integer q = d(i, t) / d(t, t);
        d.add_row_multiple(i, t, -q);
        u.add_row_multiple(i, t, -q);
        if (d(i, t) != 0) dirty = true;
      }
      for (std::size_t j = t + 1; j < c; ++j) {
        if (d(t, j) == 0) continue;
        Integer q = d(t, j) / d(t, t);
        d.add_col_multiple(j, t, -q);
        v.add_col_multiple(j, t, -q);
        if (d(t, j) != 0) dirty = true;
      }
      if (dirty) continue;

      // Pivot must divide the whole trailing block for the divisibility chain.
      bool divides = true;
      for (std::size_t i = t + 1; i < r && divides; ++i)
        for (std::size_t j = t + 1; j < c; ++j)
          if (!mpz_divisible_p(d(i, j).get_mpz_t(), d(t, t).get_mpz_t())) {
            d.add_row_multiple(t, i, 1);
            u.add_row_multiple(t, i, 1);
            divides = false;
            break;
          }
      if (divides) break;
    }
    if (d(t, t) < 0) {
      d.negate_row(t);
      u.negate_row(t);
    }
  }
  return {std::move(u), std::move(d), std::move(v)};
}

AbelianGroup cokernel(const IntMatrix& m) {
  const SmithForm snf = smith_normal_form(m);
  AbelianGroup g;
  std::size_t nonzero = 0;
  for (const auto& x : snf.invariant_factors()) {
    if (x == 0) continue;
    ++nonzero;
    if (x != 1) g.torsion.push_back(x);
  }
  g.free_rank = m.rows() - nonzero;
  return g;
}

Integer determinant(const IntMatrix& m) {
  if (!m.square()) throw PreconditionError("determinant of a non-square matrix");
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  IntMatrix a = m;
  int sign = 1;
  Integer prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a(k, k) == 0) {
      std::size_t p = k + 1;
      while (p < n && a(p, k) == 0) ++p;
      if (p == n) return 0;
      a.swap_rows(k, p);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) {
        Integer x = a(i, j) * a(k, k) - a(i, k) * a(k, j);
        mpz_divexact(a(i, j).get_mpz_t(), x.get_mpz_t(), prev.get_mpz_t());
      }
    prev = a(k, k);
  }
  return sign * a(n - 1, n - 1);
}

long signature(const IntMatrix& m) {
  if (!m.square()) throw PreconditionError("signature of a non-square matrix");
  if (!m.symmetric()) throw PreconditionError("signature of an asymmetric matrix");
  std::size_t n = m.rows();
  std::vector<std::vector<mpq_class>> a(n, std::vector<mpq_class>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) a[i][j] = mpq_class(m(i, j));

  long sig = 0;
  std::vector<bool> done(n, false);
  for (std::size_t step = 0; step < n; ++step) {
    std::size_t p = n;
    for (std::size_t i = 0; i < n; ++i)
      if (!done[i] && a[i][i] != 0) {
        p = i;
        break;
      }
    if (p == n) {
      // Every remaining diagonal entry is zero; a nonzero off-diagonal entry
      // a[i][j] gives a nonzero diagonal 2*a[i][j] after row/col i += row/col j.
      std::size_t pi = n, pj = n;
      for (std::size_t i = 0; i < n && pi == n; ++i)
        for (std::size_t j = 0; j < n; ++j)
          if (!done[i] && !done[j] && i != j && a[i][j] != 0) {
            pi = i;
            pj = j;
            break;
          }
      if (pi == n) break;  // remaining block is zero
      for (std::size_t k = 0; k < n; ++k) a[pi][k] += a[pj][k];
      for (std::size_t k = 0; k < n; ++k) a[k][pi] += a[k][pj];
      p = pi;
    }
    sig += sgn(a[p][p]);
    done[p] = true;
    for (std::size_t i = 0; i < n; ++i) {
      if (done[i] || a[i][p] == 0) continue;
      mpq_class f = a[i][p] / a[p][p];
      for (std::size_t j = 0; j < n; ++j) a[i][j] -= f * a[p][j];
    }
    for (std::size_t j = 0; j < n; ++j)
      if (!done[j]) a[p][j] = 0;
    for (std::size_t i = 0; i < n; ++i)
      if (!done[i]) a[i][p] = 0;
  }
  return sig;
}

std::size_t rank(const IntMatrix& m) {
  std::size_t r = 0;
  for (const auto& x : smith_normal_form(m).invariant_factors())
    if (x != 0) ++r;
  return r;
}

}  // namespace kirbykit

namespace kirbykit {

namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

u64 mul_mod(u64 a, u64 b, u64 p) { return static_cast<u64>(static_cast<u128>(a) * b % p); }

u64 pow_mod(u64 a, u64 e, u64 p) {
  u64 r = 1;
  for (; e; e >>= 1, a = mul_mod(a, a, p))
    if (e & 1) r = mul_mod(r, a, p);
  return r;
}

u64 inv_mod(u64 a, u64 p) { return pow_mod(a, p - 2, p); }

u64 residue(const Integer& x, u64 p) { return mpz_fdiv_ui(x.get_mpz_t(), p); }

u64 det_mod(std::vector<u64> m, std::size_t n, u64 p) {
  u64 det = 1;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && m[piv * n + col] == 0) ++piv;
    if (piv == n) return 0;
    if (piv != col) {
      for (std::size_t j = 0; j < n; ++j) std::swap(m[piv * n + j], m[col * n + j]);
      det = p - det == p ? 0 : p - det;
    }
    const u64 d = m[col * n + col];
    det = mul_mod(det, d, p);
    const u64 dinv = inv_mod(d, p);
    for (std::size_t r = col + 1; r < n; ++r) {
      const u64 f = mul_mod(m[r * n + col], dinv, p);
      if (f == 0) continue;
      for (std::size_t j = col; j < n; ++j) {
        const u64 sub = mul_mod(f, m[col * n + j], p);
        u64& x = m[r * n + j];
        x = x >= sub ? x - sub : x + p - sub;
      }
    }
  }
  return det;
}

// Monomial coefficients of the polynomial through (k, values[k]), k = 0..n-1, mod p.
std::vector<u64> interpolate_mod(std::vector<u64> c, u64 p) {
  const std::size_t n = c.size();
  for (std::size_t level = 1; level < n; ++level) {
    const u64 inv = inv_mod(level % p, p);
    for (std::size_t i = n - 1; i >= level; --i) {
      c[i] = mul_mod((c[i] + p - c[i - 1]) % p, inv, p);
      if (i == level) break;
    }
  }
  // Horner on the Newton form: poly = c[n-1]; poly = poly * (t - k) + c[k].
  std::vector<u64> poly(n, 0);
  for (std::size_t k = n; k-- > 0;) {
    for (std::size_t d = n - 1; d > 0; --d) poly[d] = (poly[d - 1] + p - mul_mod(poly[d], k % p, p)) % p;
    poly[0] = (p - mul_mod(poly[0], k % p, p) + c[k]) % p;
  }
  return poly;
}

}  // namespace

std::vector<Integer> pencil_determinant(const IntMatrix& a, const IntMatrix& b) {
  if (!a.square() || a.rows() != b.rows() || a.cols() != b.cols())
    throw PreconditionError("pencil needs two square matrices of equal size");
  const std::size_t n = a.rows();
  if (n == 0) return {Integer(1)};
  Integer bound = 1;
  for (std::size_t i = 0; i < n; ++i) {
    Integer row = 0;
    for (std::size_t j = 0; j < n; ++j) row += abs(a(i, j)) + abs(b(i, j));
    bound *= row;
  }
  if (bound == 0) return std::vector<Integer>(n + 1, Integer(0));

  std::vector<Integer> result(n + 1, Integer(0));
  Integer modulus = 1;
  Integer q = Integer(1) << 62;
  while (modulus <= 2 * bound) {
    mpz_nextprime(q.get_mpz_t(), q.get_mpz_t());
    const u64 p = q.get_ui();
    std::vector<u64> va(n * n), vb(n * n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        va[i * n + j] = residue(a(i, j), p);
        vb[i * n + j] = residue(b(i, j), p);
      }
    std::vector<u64> values(n + 1);
    std::vector<u64> m(n * n);
    for (std::size_t t = 0; t <= n; ++t) {
      for (std::size_t k = 0; k < n * n; ++k) m[k] = (va[k] + mul_mod(vb[k], t, p)) % p;
      values[t] = det_mod(m, n, p);
    }
    const std::vector<u64> coeffs = interpolate_mod(std::move(values), p);
    // Garner step: x ≡ old mod modulus, x ≡ c mod p.
    const u64 minv = inv_mod(residue(modulus, p), p);
    for (std::size_t k = 0; k <= n; ++k) {
      const u64 old = residue(result[k], p);
      const u64 delta = mul_mod((coeffs[k] + p - old) % p, minv, p);
      result[k] += modulus * Integer(static_cast<unsigned long>(delta));
    }
    modulus *= Integer(static_cast<unsigned long>(p));
  }
  const Integer half = modulus / 2;
  for (auto& c : result)
    if (c > half) c -= modulus;
  return result;
}

}  // namespace kirbykit
