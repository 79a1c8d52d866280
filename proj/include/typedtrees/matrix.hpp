#pragma once

// Dense matrices over the rationals, for type matrices and rank checks.

#include "typedtrees/rational.hpp"

#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace typedtrees {

class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols, Rational(0)) {}
  Matrix(std::initializer_list<std::vector<Rational>> rows) : Matrix(std::vector<std::vector<Rational>>(rows)) {}
  explicit Matrix(const std::vector<std::vector<Rational>>& rows) {
    rows_ = rows.size();
    cols_ = rows.empty() ? 0 : rows[0].size();
    for (const auto& r : rows) {
      if (r.size() != cols_) throw std::invalid_argument("ragged matrix");
      a_.insert(a_.end(), r.begin(), r.end());
    }
  }

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Rational& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
  const Rational& operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

  Matrix transpose() const {
    Matrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  friend Matrix operator*(const Matrix& x, const Matrix& y) {
    if (x.cols_ != y.rows_) throw std::invalid_argument("matrix dimension mismatch");
    Matrix r(x.rows_, y.cols_);
    for (std::size_t i = 0; i < x.rows_; ++i)
      for (std::size_t k = 0; k < x.cols_; ++k) {
        if (x(i, k) == 0) continue;
        for (std::size_t j = 0; j < y.cols_; ++j) r(i, j) += x(i, k) * y(k, j);
      }
    return r;
  }

  std::vector<Rational> apply(const std::vector<Rational>& v) const {
    if (v.size() != cols_) throw std::invalid_argument("vector dimension mismatch");
    std::vector<Rational> r(rows_, Rational(0));
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) r[i] += (*this)(i, j) * v[j];
    return r;
  }

  friend bool operator==(const Matrix& x, const Matrix& y) {
    return x.rows_ == y.rows_ && x.cols_ == y.cols_ && x.a_ == y.a_;
  }

  std::size_t rank() const {
    Matrix m = *this;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols_ && r < rows_; ++c) {
      std::size_t p = r;
      while (p < rows_ && m(p, c) == 0) ++p;
      if (p == rows_) continue;
      m.swap_rows(p, r);
      for (std::size_t i = r + 1; i < rows_; ++i) {
        if (m(i, c) == 0) continue;
        const Rational f = m(i, c) / m(r, c);
        for (std::size_t j = c; j < cols_; ++j) m(i, j) -= f * m(r, j);
      }
      ++r;
    }
    return r;
  }

  std::optional<Matrix> inverse() const {
    if (rows_ != cols_) throw std::invalid_argument("inverse of a non-square matrix");
    const std::size_t n = rows_;
    Matrix m = *this, inv = identity(n);
    for (std::size_t c = 0; c < n; ++c) {
      std::size_t p = c;
      while (p < n && m(p, c) == 0) ++p;
      if (p == n) return std::nullopt;
      m.swap_rows(p, c);
      inv.swap_rows(p, c);
      const Rational piv = m(c, c);
      for (std::size_t j = 0; j < n; ++j) {
        m(c, j) /= piv;
        inv(c, j) /= piv;
      }
      for (std::size_t i = 0; i < n; ++i) {
        if (i == c || m(i, c) == 0) continue;
        const Rational f = m(i, c);
        for (std::size_t j = 0; j < n; ++j) {
          m(i, j) -= f * m(c, j);
          inv(i, j) -= f * inv(c, j);
        }
      }
    }
    return inv;
  }

  /// One row per line, entries separated by spaces.
  static Matrix parse(const std::string& text) {
    std::vector<std::vector<Rational>> rows;
    std::istringstream lines(text);
    std::string line;
    while (std::getline(lines, line)) {
      std::istringstream words(line);
      std::vector<Rational> row;
      std::string w;
      while (words >> w) row.push_back(parse_rational(w));
      if (!row.empty()) rows.push_back(std::move(row));
    }
    return Matrix(rows);
  }

  std::string render() const {
    std::string out;
    for (std::size_t i = 0; i < rows_; ++i) {
      for (std::size_t j = 0; j < cols_; ++j) {
        if (j) out += ' ';
        out += to_string((*this)(i, j));
      }
      out += '\n';
    }
    return out;
  }

 private:
  void swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(a, j), (*this)(b, j));
  }

  std::size_t rows_ = 0, cols_ = 0;
  std::vector<Rational> a_;
};

}  // namespace typedtrees
