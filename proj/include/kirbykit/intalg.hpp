#pragma once

// Exact integer linear algebra: matrices over Z, Smith normal form,
// cokernels, determinants and signatures of symmetric forms.

#include <gmpxx.h>

#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

namespace kirbykit {

using Integer = mpz_class;

class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols);
  IntMatrix(std::initializer_list<std::initializer_list<long>> rows);

  static IntMatrix identity(std::size_t n);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool square() const noexcept { return rows_ == cols_; }
  bool empty() const noexcept { return rows_ == 0 || cols_ == 0; }

  Integer& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Integer& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  IntMatrix transposed() const;
  bool symmetric() const;
  bool diagonal() const;

  /// Submatrix on the given row and column index lists (in the given order).
  IntMatrix select(const std::vector<std::size_t>& row_idx,
                   const std::vector<std::size_t>& col_idx) const;

  friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
  friend IntMatrix operator+(const IntMatrix& a, const IntMatrix& b);
  friend IntMatrix operator-(const IntMatrix& a, const IntMatrix& b);
  friend bool operator==(const IntMatrix& a, const IntMatrix& b);

  // Elementary operations, used by the Smith reduction and by tests.
  void swap_rows(std::size_t i, std::size_t j);
  void swap_cols(std::size_t i, std::size_t j);
  /// row i += k * row j
  void add_row_multiple(std::size_t i, std::size_t j, const Integer& k);
  /// col i += k * col j
  void add_col_multiple(std::size_t i, std::size_t j, const Integer& k);
  void negate_row(std::size_t i);

  /// Rows separated by ';', entries by ',', e.g. "[[-2,-2],[1,0]]".
  std::string to_string() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Integer> data_;
};

/// Finitely generated abelian group Z^free_rank + Z/d1 + ... + Z/dk with d1 | d2 | ... and di >= 2.
struct AbelianGroup {
  std::size_t free_rank = 0;
  std::vector<Integer> torsion;

  bool trivial() const { return free_rank == 0 && torsion.empty(); }
  /// Order of the group, 0 when infinite.
  Integer order() const;
  /// "0", "Z", "Z/2", "Z ⊕ Z/2", ...
  std::string to_string() const;

  friend bool operator==(const AbelianGroup&, const AbelianGroup&) = default;
};

/// u * m * v == d, u and v unimodular, d diagonal with nonnegative entries d1 | d2 | ...
struct SmithForm {
  IntMatrix u;
  IntMatrix d;
  IntMatrix v;

  std::vector<Integer> invariant_factors() const;
};

SmithForm smith_normal_form(const IntMatrix& m);

/// Cokernel of m viewed as a map Z^cols -> Z^rows.
AbelianGroup cokernel(const IntMatrix& m);

/// Exact determinant (fraction-free Bareiss elimination). Throws on non-square input.
Integer determinant(const IntMatrix& m);

/// Signature (#positive - #negative eigenvalues) of a symmetric matrix, by exact
/// rational congruence diagonalization. Throws on non-square or asymmetric input.
long signature(const IntMatrix& m);

/// Rank over Q.
std::size_t rank(const IntMatrix& m);

/// Coefficients c_0..c_n of det(a + t b) for square a, b of size n. Computed modulo
/// enough word-size primes to cover a Hadamard-type coefficient bound, then lifted.
std::vector<Integer> pencil_determinant(const IntMatrix& a, const IntMatrix& b);

}  // namespace kirbykit
