#pragma once

#include <cstdint>
#include <vector>

namespace jetrank {

/// All exponent vectors (a_0, ..., a_n) with sum d, in descending
/// lexicographic order on the exponent tuple. The order is fixed so that
/// matrices reproduce exactly across runs. Size is C(n+d, d).
struct MonomialBasis {
    int n = 0;
    int d = 0;
    std::vector<std::vector<int>> exponents;

    std::size_t size() const { return exponents.size(); }
};

MonomialBasis monomial_basis(int n, int d);

/// C(n+k, k) as an exact 64-bit integer; the desk-scale ranges used here
/// stay far below overflow.
std::uint64_t binomial(std::uint64_t n, std::uint64_t k);

} // namespace jetrank
