#include "upsilon/gf2.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>
#include <string>

namespace upsilon::gf2 {

Vector::Vector(std::size_t length, std::vector<std::size_t> support)
    : length_(length), support_(std::move(support)) {
  std::sort(support_.begin(), support_.end());
  if (std::adjacent_find(support_.begin(), support_.end()) != support_.end()) {
    throw std::invalid_argument("gf2::Vector: duplicate position");
  }
  if (!support_.empty() && support_.back() >= length_) {
    throw std::invalid_argument("gf2::Vector: position " + std::to_string(support_.back()) +
                                " out of range for length " + std::to_string(length_));
  }
}

Vector Vector::unit(std::size_t length, std::size_t position) { return Vector(length, {position}); }

bool Vector::contains(std::size_t position) const {
  return std::binary_search(support_.begin(), support_.end(), position);
}

Matrix::Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), columns_(cols) {}

Matrix::Matrix(std::size_t rows, std::size_t cols,
               std::vector<std::pair<std::size_t, std::size_t>> entries)
    : Matrix(rows, cols) {
  for (const auto& [r, c] : entries) {
    if (r >= rows || c >= cols) {
      throw std::invalid_argument("gf2::Matrix: entry (" + std::to_string(r) + ", " +
                                  std::to_string(c) + ") out of bounds");
    }
    columns_[c].push_back(r);
  }
  for (auto& col : columns_) {
    std::sort(col.begin(), col.end());
    if (std::adjacent_find(col.begin(), col.end()) != col.end()) {
      throw std::invalid_argument("gf2::Matrix: duplicate entry");
    }
  }
}

Vector Matrix::column_vector(std::size_t col) const { return Vector(rows_, columns_.at(col)); }

bool Matrix::at(std::size_t row, std::size_t col) const {
  const auto& c = columns_.at(col);
  return std::binary_search(c.begin(), c.end(), row);
}

std::size_t Matrix::nonzeros() const {
  std::size_t n = 0;
  for (const auto& c : columns_) n += c.size();
  return n;
}

std::vector<std::pair<std::size_t, std::size_t>> Matrix::entries() const {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  out.reserve(nonzeros());
  for (std::size_t c = 0; c < cols_; ++c) {
    for (std::size_t r : columns_[c]) out.emplace_back(r, c);
  }
  return out;
}

Matrix Matrix::transpose() const {
  Matrix t(cols_, rows_);
  for (std::size_t c = 0; c < cols_; ++c) {
    for (std::size_t r : columns_[c]) t.columns_[r].push_back(c);
  }
  return t;
}

Matrix Matrix::select_columns(std::span<const std::size_t> cols) const {
  Matrix out(rows_, cols.size());
  for (std::size_t k = 0; k < cols.size(); ++k) out.columns_[k] = columns_.at(cols[k]);
  return out;
}

Vector Matrix::apply(const Vector& v) const {
  if (v.length() != cols_) throw std::invalid_argument("gf2::Matrix::apply: length mismatch");
  BitVector acc(rows_);
  for (std::size_t c : v.support()) {
    for (std::size_t r : columns_[c]) acc.flip(r);
  }
  return acc.to_sparse();
}

Matrix multiply(const Matrix& a, const Matrix& b) {
  if (a.cols() != b.rows()) throw std::invalid_argument("gf2::multiply: shape mismatch");
  std::vector<std::pair<std::size_t, std::size_t>> entries;
  for (std::size_t c = 0; c < b.cols(); ++c) {
    const Vector image = a.apply(b.column_vector(c));
    for (std::size_t r : image.support()) entries.emplace_back(r, c);
  }
  return Matrix(a.rows(), b.cols(), std::move(entries));
}

std::size_t rank(const Matrix& m) {
  EchelonBasis basis(m.rows());
  for (std::size_t c = 0; c < m.cols(); ++c) basis.insert(BitVector::from(m.column_vector(c)));
  return basis.rank();
}

std::vector<Vector> kernel_basis(const Matrix& m) {
  // Column reduction tracking which original columns were combined; a column
  // that reduces to zero yields a kernel vector.
  struct Pivot {
    BitVector image;
    BitVector combination;
  };
  std::vector<long> pivot_of(m.rows(), -1);
  std::vector<Pivot> pivots;
  std::vector<Vector> kernel;
  for (std::size_t c = 0; c < m.cols(); ++c) {
    BitVector image = BitVector::from(m.column_vector(c));
    BitVector combination(m.cols());
    combination.set(c);
    for (auto low = image.lowest(); low; low = image.lowest()) {
      const long p = pivot_of[*low];
      if (p < 0) break;
      image ^= pivots[p].image;
      combination ^= pivots[p].combination;
    }
    if (auto low = image.lowest()) {
      pivot_of[*low] = static_cast<long>(pivots.size());
      pivots.push_back({std::move(image), std::move(combination)});
    } else {
      kernel.push_back(combination.to_sparse());
    }
  }
  return kernel;
}

std::size_t quotient_dim(std::span<const Vector> space, std::span<const Vector> sub) {
  std::optional<std::size_t> length;
  auto check = [&](const Vector& v) {
    if (length && *length != v.length()) {
      throw std::invalid_argument("gf2::quotient_dim: vector length mismatch");
    }
    length = v.length();
  };
  for (const auto& v : space) check(v);
  for (const auto& v : sub) check(v);
  if (!length) return 0;

  EchelonBasis basis(*length);
  for (const auto& v : sub) basis.insert(BitVector::from(v));
  const std::size_t sub_rank = basis.rank();
  for (const auto& v : space) basis.insert(BitVector::from(v));
  return basis.rank() - sub_rank;
}

std::vector<Vector> columns(const Matrix& m) {
  std::vector<Vector> out;
  out.reserve(m.cols());
  for (std::size_t c = 0; c < m.cols(); ++c) out.push_back(m.column_vector(c));
  return out;
}

BitVector BitVector::from(const Vector& v) {
  BitVector out(v.length());
  for (std::size_t p : v.support()) out.set(p);
  return out;
}

BitVector& BitVector::operator^=(const BitVector& rhs) {
  if (rhs.length_ != length_) throw std::invalid_argument("gf2::BitVector: length mismatch");
  for (std::size_t w = 0; w < words_.size(); ++w) words_[w] ^= rhs.words_[w];
  return *this;
}

bool BitVector::any() const {
  return std::any_of(words_.begin(), words_.end(), [](std::uint64_t w) { return w != 0; });
}

std::optional<std::size_t> BitVector::lowest() const {
  for (std::size_t w = 0; w < words_.size(); ++w) {
    if (words_[w] != 0) return w * 64 + static_cast<std::size_t>(std::countr_zero(words_[w]));
  }
  return std::nullopt;
}

Vector BitVector::to_sparse() const {
  std::vector<std::size_t> support;
  for (std::size_t w = 0; w < words_.size(); ++w) {
    for (std::uint64_t bits = words_[w]; bits != 0; bits &= bits - 1) {
      support.push_back(w * 64 + static_cast<std::size_t>(std::countr_zero(bits)));
    }
  }
  return Vector(length_, std::move(support));
}

void EchelonBasis::reduce(BitVector& v) const {
  if (v.length() != length_) throw std::invalid_argument("gf2::EchelonBasis: length mismatch");
  for (auto low = v.lowest(); low; low = v.lowest()) {
    const long p = pivot_of_[*low];
    if (p < 0) return;
    v ^= basis_[p];
  }
}

bool EchelonBasis::contains(BitVector v) const {
  reduce(v);
  return !v.any();
}

bool EchelonBasis::insert(BitVector v) {
  reduce(v);
  const auto low = v.lowest();
  if (!low) return false;
  pivot_of_[*low] = static_cast<long>(basis_.size());
  basis_.push_back(std::move(v));
  return true;
}

}  // namespace upsilon::gf2
