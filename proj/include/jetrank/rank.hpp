#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "jetrank/matrix.hpp"

namespace jetrank {

/// Rank over GF(p) by Gaussian elimination, first nonzero pivot in column
/// order. Deterministic.
std::size_t rank_mod_p(Matrix<Fp> m);

/// Rank over the rationals by fraction-free (Bareiss) elimination on the
/// integer entries. Exact; entry growth is acceptable at desk scale.
std::size_t rank_exact(Matrix<BigInt> m);

inline std::size_t kernel_dimension(const Matrix<Fp>& m) {
    return m.cols() - rank_mod_p(m);
}

inline std::size_t kernel_dimension(const Matrix<BigInt>& m) {
    return m.cols() - rank_exact(m);
}

} // namespace jetrank
