#pragma once

#include <cstdint>
#include <numeric>
#include <string>
#include <vector>

namespace jetrank {

/// The sequence (chi, r_1 >= ... >= r_m >= 1): chi free points plus one jet
/// of length r_i per line.
struct Weight {
    long chi = 0;
    std::vector<long> lengths;

    long total() const {
        return chi + std::accumulate(lengths.begin(), lengths.end(), 0L);
    }
    long jet_sum() const { return total() - chi; }

    bool lengths_sorted() const {
        for (std::size_t i = 1; i < lengths.size(); ++i)
            if (lengths[i - 1] < lengths[i]) return false;
        return true;
    }

    /// Structural validity: chi >= 0, lengths non-increasing and positive.
    bool valid() const {
        if (chi < 0) return false;
        for (long r : lengths)
            if (r < 1) return false;
        return lengths_sorted();
    }

    /// "chi; r1 r2 ... rm" (the enumeration line format).
    std::string to_string() const {
        std::string s = std::to_string(chi) + "; ";
        for (std::size_t i = 0; i < lengths.size(); ++i) {
            if (i) s += ' ';
            s += std::to_string(lengths[i]);
        }
        return s;
    }

    friend bool operator==(const Weight& a, const Weight& b) {
        return a.chi == b.chi && a.lengths == b.lengths;
    }

    /// Stable 64-bit fingerprint, used to derive per-weight sweep seeds.
    std::uint64_t fingerprint() const;
};

} // namespace jetrank
