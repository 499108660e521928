#include "jetrank/rank.hpp"

namespace jetrank {

std::size_t rank_mod_p(Matrix<Fp> m) {
    const std::size_t rows = m.rows();
    const std::size_t cols = m.cols();
    std::size_t rank = 0;
    std::size_t row = 0;
    for (std::size_t col = 0; col < cols && row < rows; ++col) {
        std::size_t pivot = row;
        while (pivot < rows && m(pivot, col).is_zero()) ++pivot;
        if (pivot == rows) continue;
        m.swap_rows(row, pivot);
        const Fp inv = m(row, col).inverse();
        for (std::size_t i = row + 1; i < rows; ++i) {
            if (m(i, col).is_zero()) continue;
            const Fp factor = m(i, col) * inv;
            for (std::size_t j = col; j < cols; ++j)
                m(i, j) -= factor * m(row, j);
        }
        ++row;
        ++rank;
    }
    return rank;
}

std::size_t rank_exact(Matrix<BigInt> m) {
    const std::size_t rows = m.rows();
    const std::size_t cols = m.cols();
    std::size_t rank = 0;
    std::size_t row = 0;
    BigInt prev = 1;
    for (std::size_t col = 0; col < cols && row < rows; ++col) {
        std::size_t pivot = row;
        while (pivot < rows && m(pivot, col) == 0) ++pivot;
        if (pivot == rows) continue;
        m.swap_rows(row, pivot);
        // one Bareiss step; division by the previous pivot is exact
        // (Sylvester's identity), also with skipped columns
        for (std::size_t i = row + 1; i < rows; ++i) {
            for (std::size_t j = col + 1; j < cols; ++j)
                m(i, j) = (m(i, j) * m(row, col) - m(i, col) * m(row, j)) / prev;
            m(i, col) = 0;
        }
        prev = m(row, col);
        ++row;
        ++rank;
    }
    return rank;
}

} // namespace jetrank
