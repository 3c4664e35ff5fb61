#pragma once

#include "f2mzv/rational.hpp"

#include <vector>

namespace f2mzv {

/// Dense matrix over Q, row-major.
class QMatrix {
  public:
    QMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), a_(rows * cols) {}

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    Rational &at(std::size_t r, std::size_t c) { return a_[r * cols_ + c]; }
    const Rational &at(std::size_t r, std::size_t c) const { return a_[r * cols_ + c]; }

  private:
    std::size_t rows_, cols_;
    std::vector<Rational> a_;
};

/// Exact null-space basis via fraction-free (Bareiss) elimination on the
/// denominator-cleared integer matrix. Vectors are primitive integer vectors
/// with positive leading entry; empty result means M is injective.
std::vector<std::vector<Rational>> kernel(const QMatrix &m);

std::size_t rank(const QMatrix &m);

} // namespace f2mzv
