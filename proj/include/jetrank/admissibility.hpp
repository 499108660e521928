#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <vector>

#include "jetrank/errors.hpp"
#include "jetrank/weight.hpp"

namespace jetrank {

/// dim H^0(O(d)) on P^n, i.e. C(n+d, d).
std::uint64_t dimension(int n, int d);

/// Condition C(n,d): r_1 <= d+1 and, for n = 2, the partial-sum bounds
/// r_1 + ... + r_s <= d*s + 1 - (s-1)(s-2)/2 for s = 1..d+1 (absent
/// entries count as 0). Lengths must arrive non-increasing.
bool check_condition_C(int n, int d, const std::vector<long>& lengths);

/// total = C(n+d,d), lengths non-increasing >= 1, and condition C.
bool is_admissible(int n, int d, const Weight& w);

/// Flattened (chi, r_1, r_2, ...) compared position-wise, shorter side
/// zero-padded.
std::strong_ordering compare_lex(const Weight& w1, const Weight& w2);

struct AdmissibleSet {
    int n = 0;
    int d = 0;
    std::vector<Weight> weights; // strictly descending lex
};

inline constexpr std::uint64_t kDefaultEnumerationCap = 1'000'000;

/// All d-admissible weights for P^n, descending lex. Throws CapExceeded
/// when more than `cap` weights would be produced.
AdmissibleSet enumerate_admissible(int n, int d,
                                   std::uint64_t cap = kDefaultEnumerationCap);

/// Leading block matching the extremal pattern: d+1, d, ..., d+2-p for
/// n = 2, all entries equal to d+1 for n >= 3. p is maximal; the first
/// tail entry then sits strictly below d+1-p (n=2) resp. at most d (n>=3).
struct ExtremalDecomposition {
    int p = 0;
    std::vector<long> extremal;
    std::vector<long> tail;
};

ExtremalDecomposition decompose_extremal(const Weight& w, int n, int d);

/// The move (chi, m_1..m_p, r_1+1, r_2, ..., r_{t-1}, r_t - 1, r_{t+1},
/// ..., r_q) where r_2 = ... = r_t > r_{t+1}, for n = 2. An entry
/// decremented to 0 is dropped; the result is re-sorted non-increasingly.
/// Empty when the tail has fewer than two entries.
std::optional<Weight> tilde_plus(const Weight& w, int d);

/// Q(s) = s^2 - (3 + 2(d - p - r2)) s + 2(r1 - r2).
long q_form(long d, long p, long r1, long r2, long s);

} // namespace jetrank
