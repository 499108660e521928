#include "jetrank/scalar.hpp"

#include <ostream>

namespace jetrank {

namespace {

bool is_prime(std::uint64_t p) {
    if (p < 2) return false;
    if (p % 2 == 0) return p == 2;
    for (std::uint64_t q = 3; q * q <= p; q += 2) {
        if (p % q == 0) return false;
    }
    return true;
}

} // namespace

PrimeModulus::PrimeModulus(std::uint64_t p) : p_(p) {
    if (p <= 2) throw std::invalid_argument("modulus must exceed 2");
    if (p >= (std::uint64_t{1} << 31))
        throw std::invalid_argument("modulus must be below 2^31");
    if (!is_prime(p)) throw std::invalid_argument("modulus is not prime");
}

Fp Fp::from_int(std::int64_t value, const PrimeModulus& m) {
    const std::int64_t p = static_cast<std::int64_t>(m.value());
    std::int64_t r = value % p;
    if (r < 0) r += p;
    return Fp(static_cast<std::uint64_t>(r), m);
}

void Fp::require_same_modulus(const Fp& o) const {
    if (p_ != o.p_) throw std::invalid_argument("mixed moduli in Fp arithmetic");
    if (p_ == 0) throw std::invalid_argument("arithmetic on uninitialized Fp");
}

Fp Fp::operator+(const Fp& o) const {
    require_same_modulus(o);
    Fp r = *this;
    r.v_ += o.v_;
    if (r.v_ >= p_) r.v_ -= p_;
    return r;
}

Fp Fp::operator-(const Fp& o) const {
    require_same_modulus(o);
    Fp r = *this;
    r.v_ += p_ - o.v_;
    if (r.v_ >= p_) r.v_ -= p_;
    return r;
}

Fp Fp::operator*(const Fp& o) const {
    require_same_modulus(o);
    Fp r = *this;
    r.v_ = (v_ * o.v_) % p_; // p < 2^31 keeps the product below 2^62
    return r;
}

Fp Fp::operator-() const {
    Fp r = *this;
    r.v_ = v_ == 0 ? 0 : p_ - v_;
    return r;
}

Fp Fp::inverse() const {
    if (p_ == 0) throw std::invalid_argument("inverse of uninitialized Fp");
    if (v_ == 0) throw std::domain_error("inverse of zero residue");
    // extended Euclid on (v, p)
    std::int64_t a = static_cast<std::int64_t>(v_);
    std::int64_t b = static_cast<std::int64_t>(p_);
    std::int64_t x0 = 1, x1 = 0;
    while (b != 0) {
        const std::int64_t q = a / b;
        std::int64_t t = a - q * b;
        a = b;
        b = t;
        t = x0 - q * x1;
        x0 = x1;
        x1 = t;
    }
    std::int64_t inv = x0 % static_cast<std::int64_t>(p_);
    if (inv < 0) inv += static_cast<std::int64_t>(p_);
    Fp r = *this;
    r.v_ = static_cast<std::uint64_t>(inv);
    return r;
}

std::ostream& operator<<(std::ostream& os, const Fp& x) { return os << x.v_; }

} // namespace jetrank
