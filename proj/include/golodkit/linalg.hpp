#pragma once

#include "golodkit/scalar.hpp"

#include <cstddef>
#include <vector>

namespace golodkit {

/// Dense row-major matrix over a field; entries default to zero of the field.
class Matrix {
public:
    Matrix(std::size_t rows, std::size_t cols, Field f);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    Field field() const { return field_; }

    Scalar& at(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const Scalar& at(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    /// Rank by exact Gaussian elimination (works on a copy).
    std::size_t rank() const;

private:
    std::size_t rows_, cols_;
    Field field_;
    std::vector<Scalar> data_;
};

/// Homology ranks of a finite chain complex given its chain-group dimensions
/// dims[0..N] and ranks of the boundary maps; rank_of[n] is the rank of the
/// map out of degree n (rank_of[0] = 0 for an unaugmented complex).
std::vector<std::size_t> homology_from_ranks(const std::vector<std::size_t>& dims,
                                             const std::vector<std::size_t>& rank_of);

} // namespace golodkit
