#include "jetrank/geometry.hpp"

#include <algorithm>
#include <functional>
#include <initializer_list>

#include "jetrank/rank.hpp"

namespace jetrank {

namespace {

constexpr int kMaxResamples = 32;

Matrix<Fp> stack_coords(std::initializer_list<const ProjPoint*> pts) {
    std::vector<std::vector<Fp>> rows;
    for (const ProjPoint* p : pts) rows.push_back(p->coords);
    return Matrix<Fp>::from_rows(rows);
}

} // namespace

bool ProjPoint::is_zero_vector() const {
    for (const Fp& c : coords)
        if (!c.is_zero()) return false;
    return true;
}

bool proj_equal(const ProjPoint& u, const ProjPoint& v) {
    const std::size_t k = u.coords.size();
    if (k != v.coords.size()) return false;
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = i + 1; j < k; ++j)
            if (u.coords[i] * v.coords[j] != u.coords[j] * v.coords[i]) return false;
    return true;
}

bool Line::spans_rank_two() const {
    return rank_mod_p(stack_coords({&a, &b})) == 2;
}

bool point_on_line(const ProjPoint& pt, const Line& l) {
    return rank_mod_p(stack_coords({&l.a, &l.b, &pt})) == 2;
}

bool same_line(const Line& l1, const Line& l2) {
    return rank_mod_p(stack_coords({&l1.a, &l1.b, &l2.a, &l2.b})) == 2;
}

ProjPoint Jet::support() const {
    ProjPoint s;
    s.coords.reserve(axis.a.coords.size());
    for (std::size_t i = 0; i < axis.a.coords.size(); ++i)
        s.coords.push_back(axis.a.coords[i] + support_param * axis.b.coords[i]);
    return s;
}

Weight weight_of(const Configuration& c) {
    Weight w;
    w.chi = static_cast<long>(c.free_points.size());
    for (const Jet& j : c.jets)
        if (j.length > 0) w.lengths.push_back(j.length);
    std::sort(w.lengths.begin(), w.lengths.end(), std::greater<long>());
    return w;
}

ProjPoint random_point(int n, const PrimeModulus& p, Rng& rng) {
    ProjPoint pt;
    do {
        pt.coords.clear();
        for (int i = 0; i <= n; ++i) pt.coords.emplace_back(rng.below(p.value()), p);
    } while (pt.is_zero_vector());
    return pt;
}

Line random_line(int n, const PrimeModulus& p, Rng& rng) {
    Line l;
    l.a = random_point(n, p, rng);
    do {
        l.b = random_point(n, p, rng);
    } while (!l.spans_rank_two());
    return l;
}

Configuration sample_configuration(const Weight& w, int n, const PrimeModulus& p,
                                   std::uint64_t seed) {
    if (n < 2) throw std::invalid_argument("sample_configuration needs n >= 2");
    if (!w.valid()) throw std::invalid_argument("invalid weight");
    Rng rng(seed);
    Configuration c;
    c.n = n;
    c.seed = seed;

    std::vector<ProjPoint> supports;
    auto support_clashes = [&](const Line& candidate) {
        const ProjPoint& s = candidate.a; // support at t0 = 0
        for (std::size_t i = 0; i < c.jets.size(); ++i) {
            if (proj_equal(s, supports[i])) return true;
            if (point_on_line(s, c.jets[i].axis)) return true;
            if (point_on_line(supports[i], candidate)) return true;
        }
        return false;
    };

    for (long r : w.lengths) {
        int attempts = 0;
        for (;;) {
            Line l = random_line(n, p, rng);
            if (!support_clashes(l)) {
                supports.push_back(l.a);
                c.jets.push_back(Jet{std::move(l), Fp(0, p), r});
                break;
            }
            if (++attempts > kMaxResamples)
                throw RetriesExhausted("jet sampling: genericity guards kept failing");
        }
    }

    auto point_clashes = [&](const ProjPoint& pt) {
        for (const ProjPoint& s : supports)
            if (proj_equal(pt, s)) return true;
        for (const ProjPoint& q : c.free_points)
            if (proj_equal(pt, q)) return true;
        return false;
    };

    for (long i = 0; i < w.chi; ++i) {
        int attempts = 0;
        for (;;) {
            ProjPoint pt = random_point(n, p, rng);
            if (!point_clashes(pt)) {
                c.free_points.push_back(std::move(pt));
                break;
            }
            if (++attempts > kMaxResamples)
                throw RetriesExhausted("point sampling: distinctness kept failing");
        }
    }
    return c;
}

Jet line_as_jet(const Line& l, long e) {
    if (e < 0) throw std::invalid_argument("degree must be non-negative");
    const PrimeModulus p(l.a.coords.front().modulus());
    return Jet{l, Fp(0, p), e + 1};
}

} // namespace jetrank
