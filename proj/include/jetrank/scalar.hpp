#pragma once

#include <cstdint>
#include <iosfwd>
#include <stdexcept>

#include <boost/multiprecision/cpp_int.hpp>

namespace jetrank {

/// Unbounded signed integer used by the characteristic-zero oracle path.
using BigInt = boost::multiprecision::cpp_int;

/// An odd prime p with 2 < p < 2^31, so products of canonical residues fit
/// in 64 bits. Primality is checked by trial division at construction.
class PrimeModulus {
  public:
    explicit PrimeModulus(std::uint64_t p);

    std::uint64_t value() const { return p_; }

    friend bool operator==(const PrimeModulus& a, const PrimeModulus& b) {
        return a.p_ == b.p_;
    }

  private:
    std::uint64_t p_;
};

/// Canonical residue in [0, p). Arithmetic between residues of different
/// moduli is rejected.
class Fp {
  public:
    Fp() : v_(0), p_(0) {}
    Fp(std::uint64_t value, const PrimeModulus& m) : v_(value % m.value()), p_(m.value()) {}

    /// Signed construction: negative values are reduced into [0, p).
    static Fp from_int(std::int64_t value, const PrimeModulus& m);

    std::uint64_t value() const { return v_; }
    std::uint64_t modulus() const { return p_; }
    bool is_zero() const { return v_ == 0; }

    Fp operator+(const Fp& o) const;
    Fp operator-(const Fp& o) const;
    Fp operator*(const Fp& o) const;
    Fp operator-() const;
    /// Multiplicative inverse by extended Euclid; throws on zero.
    Fp inverse() const;

    Fp& operator+=(const Fp& o) { return *this = *this + o; }
    Fp& operator-=(const Fp& o) { return *this = *this - o; }
    Fp& operator*=(const Fp& o) { return *this = *this * o; }

    friend bool operator==(const Fp& a, const Fp& b) {
        a.require_same_modulus(b);
        return a.v_ == b.v_;
    }
    friend bool operator!=(const Fp& a, const Fp& b) { return !(a == b); }

    friend std::ostream& operator<<(std::ostream& os, const Fp& x);

  private:
    void require_same_modulus(const Fp& o) const;

    std::uint64_t v_;
    std::uint64_t p_; // 0 only for the default-constructed placeholder
};

} // namespace jetrank
