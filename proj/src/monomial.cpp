#include "jetrank/monomial.hpp"

#include <stdexcept>

namespace jetrank {

namespace {

void emit(std::vector<int>& current, int pos, int remaining,
          std::vector<std::vector<int>>& out) {
    if (pos == static_cast<int>(current.size()) - 1) {
        current[pos] = remaining;
        out.push_back(current);
        return;
    }
    // descending lex: highest exponent first at each position
    for (int e = remaining; e >= 0; --e) {
        current[pos] = e;
        emit(current, pos + 1, remaining - e, out);
    }
}

} // namespace

MonomialBasis monomial_basis(int n, int d) {
    if (n < 1 || d < 0) throw std::invalid_argument("monomial_basis: need n >= 1, d >= 0");
    MonomialBasis b;
    b.n = n;
    b.d = d;
    std::vector<int> current(n + 1, 0);
    emit(current, 0, d, b.exponents);
    return b;
}

std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
    if (k > n) return 0;
    if (k > n - k) k = n - k;
    std::uint64_t r = 1;
    for (std::uint64_t i = 1; i <= k; ++i) {
        r = r * (n - k + i) / i; // exact: r*(n-k+i) is divisible by i here
    }
    return r;
}

} // namespace jetrank
