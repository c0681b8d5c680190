#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace upsilon::gf2 {

// Sparse vector over GF(2): the set of positions holding 1.
class Vector {
 public:
  Vector() = default;
  // Positions may be given in any order; duplicates or out-of-range positions throw.
  Vector(std::size_t length, std::vector<std::size_t> support);

  static Vector unit(std::size_t length, std::size_t position);

  std::size_t length() const { return length_; }
  const std::vector<std::size_t>& support() const { return support_; }
  bool is_zero() const { return support_.empty(); }
  bool contains(std::size_t position) const;

  friend bool operator==(const Vector&, const Vector&) = default;

 private:
  std::size_t length_ = 0;
  std::vector<std::size_t> support_;  // sorted
};

// Sparse matrix over GF(2): the set of (row, col) positions holding 1.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols);
  // Out-of-bounds or duplicate entries throw std::invalid_argument.
  Matrix(std::size_t rows, std::size_t cols,
         std::vector<std::pair<std::size_t, std::size_t>> entries);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  // Row indices of the 1s in column `col`, sorted.
  const std::vector<std::size_t>& column(std::size_t col) const { return columns_.at(col); }
  Vector column_vector(std::size_t col) const;
  bool at(std::size_t row, std::size_t col) const;
  std::size_t nonzeros() const;
  std::vector<std::pair<std::size_t, std::size_t>> entries() const;

  Matrix transpose() const;
  // Keeps only the listed columns, in the given order.
  Matrix select_columns(std::span<const std::size_t> cols) const;
  Vector apply(const Vector& v) const;

  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<std::vector<std::size_t>> columns_;
};

Matrix multiply(const Matrix& a, const Matrix& b);

std::size_t rank(const Matrix& m);
std::vector<Vector> kernel_basis(const Matrix& m);
// dim(span(space) / (span(space) ∩ span(sub))). Throws std::invalid_argument on
// mixed vector lengths.
std::size_t quotient_dim(std::span<const Vector> space, std::span<const Vector> sub);
// Column span of m as a list of vectors.
std::vector<Vector> columns(const Matrix& m);

// Packed dense bit vector used by the elimination routines.
class BitVector {
 public:
  BitVector() = default;
  explicit BitVector(std::size_t length) : length_(length), words_((length + 63) / 64, 0) {}
  static BitVector from(const Vector& v);

  std::size_t length() const { return length_; }
  bool test(std::size_t i) const { return (words_[i / 64] >> (i % 64)) & 1u; }
  void set(std::size_t i) { words_[i / 64] |= std::uint64_t{1} << (i % 64); }
  void flip(std::size_t i) { words_[i / 64] ^= std::uint64_t{1} << (i % 64); }
  BitVector& operator^=(const BitVector& rhs);
  bool any() const;
  // Lowest set position, or nullopt for the zero vector.
  std::optional<std::size_t> lowest() const;
  Vector to_sparse() const;

 private:
  std::size_t length_ = 0;
  std::vector<std::uint64_t> words_;
};

// Row-echelon basis of a growing subspace, keyed by lowest set bit.
class EchelonBasis {
 public:
  explicit EchelonBasis(std::size_t length) : length_(length), pivot_of_(length, -1) {}

  std::size_t length() const { return length_; }
  std::size_t rank() const { return basis_.size(); }
  // Reduces v in place against the basis; v is zero afterwards iff it was in the span.
  void reduce(BitVector& v) const;
  bool contains(BitVector v) const;
  // Returns true iff v was independent of the current span (and was added).
  bool insert(BitVector v);

 private:
  std::size_t length_;
  std::vector<long> pivot_of_;
  std::vector<BitVector> basis_;
};

}  // namespace upsilon::gf2
