#include "golodkit/linalg.hpp"

#include <stdexcept>
#include <utility>

namespace golodkit {

Matrix::Matrix(std::size_t rows, std::size_t cols, Field f)
    : rows_(rows), cols_(cols), field_(f), data_(rows * cols, Scalar::zero(f))
{
}

std::size_t Matrix::rank() const
{
    std::vector<Scalar> m = data_;
    std::size_t rank = 0;
    for (std::size_t c = 0; c < cols_ && rank < rows_; ++c) {
        std::size_t piv = rank;
        while (piv < rows_ && m[piv * cols_ + c].is_zero())
            ++piv;
        if (piv == rows_)
            continue;
        if (piv != rank)
            for (std::size_t j = c; j < cols_; ++j)
                std::swap(m[piv * cols_ + j], m[rank * cols_ + j]);
        Scalar inv = m[rank * cols_ + c].inverse();
        for (std::size_t i = rank + 1; i < rows_; ++i) {
            Scalar f = m[i * cols_ + c];
            if (f.is_zero())
                continue;
            f *= inv;
            for (std::size_t j = c; j < cols_; ++j)
                if (!m[rank * cols_ + j].is_zero())
                    m[i * cols_ + j] -= f * m[rank * cols_ + j];
        }
        ++rank;
    }
    return rank;
}

std::vector<std::size_t> homology_from_ranks(const std::vector<std::size_t>& dims,
                                             const std::vector<std::size_t>& rank_of)
{
    if (rank_of.size() != dims.size())
        throw std::invalid_argument("homology_from_ranks: size mismatch");
    std::vector<std::size_t> h(dims.size());
    for (std::size_t n = 0; n < dims.size(); ++n) {
        std::size_t in = n + 1 < dims.size() ? rank_of[n + 1] : 0;
        if (rank_of[n] + in > dims[n])
            throw std::logic_error("boundary ranks exceed chain dimension");
        h[n] = dims[n] - rank_of[n] - in;
    }
    return h;
}

} // namespace golodkit
