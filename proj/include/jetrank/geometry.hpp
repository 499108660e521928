#pragma once

#include <cstdint>
#include <vector>

#include "jetrank/errors.hpp"
#include "jetrank/rng.hpp"
#include "jetrank/scalar.hpp"
#include "jetrank/weight.hpp"

namespace jetrank {

/// Point of P^n: n+1 homogeneous coordinates, not all zero. Equality is
/// proportionality of coordinate vectors.
struct ProjPoint {
    std::vector<Fp> coords;

    std::size_t ambient_dim() const { return coords.size() - 1; }
    bool is_zero_vector() const;
};

/// Exact projective equality (all 2x2 coordinate minors vanish).
bool proj_equal(const ProjPoint& u, const ProjPoint& v);

/// Line spanned by two independent points; parametrized as a + t*b.
struct Line {
    ProjPoint a; // support anchor
    ProjPoint b; // direction anchor

    bool spans_rank_two() const;
};

bool point_on_line(const ProjPoint& pt, const Line& l);

/// Same line as a set: equal row spaces of the two spanning pairs.
bool same_line(const Line& l1, const Line& l2);

/// Divisor of degree `length` supported at a + t0*b on its axis.
/// length 0 is the empty subscheme; a 1-jet still carries its axis.
struct Jet {
    Line axis;
    Fp support_param; // t0
    long length = 0;

    ProjPoint support() const;
};

/// Concrete jets plus free points realizing a weight, with the seed that
/// produced them.
struct Configuration {
    std::vector<Jet> jets;
    std::vector<ProjPoint> free_points;
    int n = 0;
    std::uint64_t seed = 0;
};

/// (chi, jet lengths sorted non-increasingly); 0-jets are dropped.
Weight weight_of(const Configuration& c);

ProjPoint random_point(int n, const PrimeModulus& p, Rng& rng);
Line random_line(int n, const PrimeModulus& p, Rng& rng);

/// One random line per length, jet support at t0 = 0 (the random anchor),
/// plus chi random free points. Guards: supports and free points pairwise
/// distinct, no support on the axis of a different jet. Each element gets
/// at most 32 resamples before RetriesExhausted.
Configuration sample_configuration(const Weight& w, int n, const PrimeModulus& p,
                                   std::uint64_t seed);

/// In degree e a line imposes the same conditions as any (e+1)-jet on it.
Jet line_as_jet(const Line& l, long e);

} // namespace jetrank
