#ifndef PATHDEA_MATRIX_HPP
#define PATHDEA_MATRIX_HPP

#include <cstddef>
#include <initializer_list>
#include <vector>

#include "pathdea/errors.hpp"

namespace pathdea {

/// Dense row-major matrix of doubles. Deliberately minimal: the LP tableaus
/// and DEA data blocks in this library are small and dense by construction.
class Matrix {
 public:
  Matrix() = default;

  Matrix(std::size_t rows, std::size_t cols, double fill = 0.0)
      : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

  static Matrix from_rows(std::initializer_list<std::initializer_list<double>> rows) {
    Matrix m;
    m.rows_ = rows.size();
    m.cols_ = rows.size() == 0 ? 0 : rows.begin()->size();
    m.data_.reserve(m.rows_ * m.cols_);
    for (const auto& r : rows) {
      if (r.size() != m.cols_) throw DimensionMismatch("ragged initializer rows");
      m.data_.insert(m.data_.end(), r.begin(), r.end());
    }
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool empty() const { return data_.empty(); }

  double& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  double operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  std::vector<double> col(std::size_t j) const {
    std::vector<double> out(rows_);
    for (std::size_t i = 0; i < rows_; ++i) out[i] = (*this)(i, j);
    return out;
  }

  std::vector<double> row(std::size_t i) const {
    return std::vector<double>(data_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
                               data_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_));
  }

  /// A * v for v of length cols().
  std::vector<double> multiply(const std::vector<double>& v) const {
    if (v.size() != cols_) throw DimensionMismatch("matrix-vector size mismatch");
    std::vector<double> out(rows_, 0.0);
    for (std::size_t i = 0; i < rows_; ++i) {
      double acc = 0.0;
      const double* r = &data_[i * cols_];
      for (std::size_t j = 0; j < cols_; ++j) acc += r[j] * v[j];
      out[i] = acc;
    }
    return out;
  }

  bool operator==(const Matrix& other) const {
    return rows_ == other.rows_ && cols_ == other.cols_ && data_ == other.data_;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<double> data_;
};

}  // namespace pathdea

#endif  // PATHDEA_MATRIX_HPP
