#include "jetrank/admissibility.hpp"

#include <algorithm>
#include <functional>

#include "jetrank/monomial.hpp"

namespace jetrank {

namespace {

// n=2 bound at position s; increasing on 1..d+1
long partial_sum_bound(int d, long s) {
    return static_cast<long>(d) * s + 1 - (s - 1) * (s - 2) / 2;
}

} // namespace

std::uint64_t dimension(int n, int d) {
    if (n < 1 || d < 0) throw std::invalid_argument("dimension: need n >= 1, d >= 0");
    return binomial(static_cast<std::uint64_t>(n) + d, d);
}

bool check_condition_C(int n, int d, const std::vector<long>& lengths) {
    for (std::size_t i = 1; i < lengths.size(); ++i)
        if (lengths[i - 1] < lengths[i])
            throw UnsortedInput("check_condition_C: lengths must be non-increasing");
    if (!lengths.empty() && lengths.front() > d + 1) return false;
    if (n == 2) {
        long sum = 0;
        for (long s = 1; s <= d + 1; ++s) {
            if (s <= static_cast<long>(lengths.size())) sum += lengths[s - 1];
            if (sum > partial_sum_bound(d, s)) return false;
        }
    }
    return true;
}

bool is_admissible(int n, int d, const Weight& w) {
    if (!w.valid()) return false;
    if (static_cast<std::uint64_t>(w.total()) != dimension(n, d)) return false;
    return check_condition_C(n, d, w.lengths);
}

std::strong_ordering compare_lex(const Weight& w1, const Weight& w2) {
    auto at = [](const Weight& w, std::size_t i) -> long {
        if (i == 0) return w.chi;
        return i <= w.lengths.size() ? w.lengths[i - 1] : 0;
    };
    const std::size_t len = 1 + std::max(w1.lengths.size(), w2.lengths.size());
    for (std::size_t i = 0; i < len; ++i) {
        if (auto c = at(w1, i) <=> at(w2, i); c != 0) return c;
    }
    return std::strong_ordering::equal;
}

AdmissibleSet enumerate_admissible(int n, int d, std::uint64_t cap) {
    if (n < 2 || d < 0) throw std::invalid_argument("enumerate_admissible: need n >= 2, d >= 0");
    const long total = static_cast<long>(dimension(n, d));
    AdmissibleSet out;
    out.n = n;
    out.d = d;

    std::vector<long> lengths;
    std::function<void(long, long)> gen = [&](long budget, long max_part) {
        // every prefix reached here already satisfies condition C
        if (out.weights.size() >= cap)
            throw CapExceeded("enumerate_admissible: weight cap exceeded");
        out.weights.push_back(Weight{budget, lengths}); // chi absorbs the unused budget
        for (long r = std::min(max_part, budget); r >= 1; --r) {
            if (n == 2) {
                const long s = static_cast<long>(lengths.size()) + 1;
                if (s <= d + 1) {
                    const long sum = (total - budget) + r;
                    if (sum > partial_sum_bound(d, s)) continue;
                }
            }
            lengths.push_back(r);
            gen(budget - r, r);
            lengths.pop_back();
        }
    };
    gen(total, d + 1);

    std::sort(out.weights.begin(), out.weights.end(),
              [](const Weight& a, const Weight& b) { return compare_lex(a, b) > 0; });
    return out;
}

ExtremalDecomposition decompose_extremal(const Weight& w, int n, int d) {
    ExtremalDecomposition dec;
    std::size_t i = 0;
    for (; i < w.lengths.size(); ++i) {
        const long expected = n == 2 ? static_cast<long>(d) + 1 - static_cast<long>(i)
                                     : static_cast<long>(d) + 1;
        if (w.lengths[i] != expected) break;
        dec.extremal.push_back(w.lengths[i]);
    }
    dec.p = static_cast<int>(i);
    dec.tail.assign(w.lengths.begin() + i, w.lengths.end());
    return dec;
}

std::optional<Weight> tilde_plus(const Weight& w, int d) {
    const ExtremalDecomposition dec = decompose_extremal(w, 2, d);
    const std::size_t q = dec.tail.size();
    if (q <= 1) return std::nullopt;
    // t = largest index with tail value equal to r_2 (1-based in the tail)
    const long r2 = dec.tail[1];
    std::size_t t = 1;
    while (t + 1 < q && dec.tail[t + 1] == r2) ++t;
    std::vector<long> tail = dec.tail;
    tail[0] += 1;
    tail[t] -= 1;
    Weight out;
    out.chi = w.chi;
    out.lengths = dec.extremal;
    for (long r : tail)
        if (r > 0) out.lengths.push_back(r);
    std::sort(out.lengths.begin(), out.lengths.end(), std::greater<long>());
    return out;
}

long q_form(long d, long p, long r1, long r2, long s) {
    return s * s - (3 + 2 * (d - p - r2)) * s + 2 * (r1 - r2);
}

} // namespace jetrank
