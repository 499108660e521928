#include "jetrank/conditions.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace jetrank {

namespace {

// Ring contexts let the same row assembly run over GF(p) and over the
// integers (oracle path).
struct FpCtx {
    PrimeModulus p;
    using Elem = Fp;
    Fp zero() const { return Fp(0, p); }
    Fp one() const { return Fp(1, p); }
    Fp from_count(std::uint64_t c) const { return Fp(c, p); }
    Fp lift(const Fp& x) const { return x; }
};

struct BigIntCtx {
    using Elem = BigInt;
    BigInt zero() const { return 0; }
    BigInt one() const { return 1; }
    BigInt from_count(std::uint64_t c) const { return BigInt(c); }
    BigInt lift(const Fp& x) const { return BigInt(x.value()); }
};

// prod_j (a_j + t b_j)^{alpha_j} as exactly d+1 coefficients.
template <typename Ctx>
std::vector<typename Ctx::Elem> restrict_monomial(const std::vector<int>& alpha,
                                                  const Line& l, const Ctx& ctx) {
    using T = typename Ctx::Elem;
    const int d = std::accumulate(alpha.begin(), alpha.end(), 0);
    std::vector<T> poly{ctx.one()};
    poly.reserve(d + 1);
    for (std::size_t j = 0; j < alpha.size(); ++j) {
        const T aj = ctx.lift(l.a.coords[j]);
        const T bj = ctx.lift(l.b.coords[j]);
        for (int rep = 0; rep < alpha[j]; ++rep) {
            std::vector<T> next(poly.size() + 1, ctx.zero());
            for (std::size_t k = 0; k < poly.size(); ++k) {
                next[k] += poly[k] * aj;
                next[k + 1] += poly[k] * bj;
            }
            poly = std::move(next);
        }
    }
    poly.resize(d + 1, ctx.zero());
    return poly;
}

// Coefficients of g(t0 + s) in s: c'_i = sum_{k>=i} c_k C(k,i) t0^{k-i}.
// The binomials stay below p whenever p > deg, so no spurious vanishing.
template <typename Ctx>
std::vector<typename Ctx::Elem> taylor_shift(const std::vector<typename Ctx::Elem>& c,
                                             const typename Ctx::Elem& t0,
                                             const Ctx& ctx) {
    using T = typename Ctx::Elem;
    const std::size_t len = c.size();
    std::vector<T> out(len, ctx.zero());
    for (std::size_t i = 0; i < len; ++i) {
        T pw = ctx.one();
        for (std::size_t k = i; k < len; ++k) {
            out[i] += c[k] * ctx.from_count(binomial(k, i)) * pw;
            pw *= t0;
        }
    }
    return out;
}

template <typename Ctx>
std::vector<std::vector<typename Ctx::Elem>> jet_rows_impl(const Jet& j,
                                                           const MonomialBasis& basis,
                                                           const Ctx& ctx) {
    using T = typename Ctx::Elem;
    std::vector<std::vector<T>> rows(j.length >= 0 ? j.length : 0,
                                     std::vector<T>(basis.size(), ctx.zero()));
    if (j.length <= 0) return rows;
    const bool shifted = !j.support_param.is_zero();
    const T t0 = ctx.lift(j.support_param);
    for (std::size_t col = 0; col < basis.size(); ++col) {
        std::vector<T> g = restrict_monomial(basis.exponents[col], j.axis, ctx);
        if (shifted) g = taylor_shift(g, t0, ctx);
        const long avail = std::min<long>(j.length, static_cast<long>(g.size()));
        for (long i = 0; i < avail; ++i) rows[i][col] = g[i];
    }
    return rows;
}

template <typename Ctx>
std::vector<typename Ctx::Elem> point_row_impl(const ProjPoint& pt,
                                               const MonomialBasis& basis,
                                               const Ctx& ctx) {
    using T = typename Ctx::Elem;
    std::vector<T> row;
    row.reserve(basis.size());
    for (const auto& alpha : basis.exponents) {
        T v = ctx.one();
        for (std::size_t j = 0; j < alpha.size(); ++j) {
            const T c = ctx.lift(pt.coords[j]);
            for (int rep = 0; rep < alpha[j]; ++rep) v *= c;
        }
        row.push_back(std::move(v));
    }
    return row;
}

template <typename Ctx>
ConditionMatrix<typename Ctx::Elem> condition_matrix_impl(const Configuration& c, int d,
                                                          const Ctx& ctx) {
    using T = typename Ctx::Elem;
    const MonomialBasis basis = monomial_basis(c.n, d);
    std::vector<std::vector<T>> rows;
    std::vector<RowLabel> labels;
    for (std::size_t ji = 0; ji < c.jets.size(); ++ji) {
        auto jr = jet_rows_impl(c.jets[ji], basis, ctx);
        for (std::size_t i = 0; i < jr.size(); ++i) {
            rows.push_back(std::move(jr[i]));
            labels.push_back({RowLabel::Source::jet, static_cast<int>(ji),
                              static_cast<int>(i)});
        }
    }
    for (std::size_t pi = 0; pi < c.free_points.size(); ++pi) {
        rows.push_back(point_row_impl(c.free_points[pi], basis, ctx));
        labels.push_back({RowLabel::Source::free_point, static_cast<int>(pi), 0});
    }
    ConditionMatrix<T> cm;
    if (rows.empty()) {
        cm.matrix = Matrix<T>(0, basis.size(), std::vector<T>{});
    } else {
        cm.matrix = Matrix<T>::from_rows(rows);
    }
    cm.row_labels = std::move(labels);
    cm.basis = basis;
    return cm;
}

PrimeModulus modulus_of(const Configuration& c) {
    if (!c.jets.empty()) return PrimeModulus(c.jets.front().axis.a.coords.front().modulus());
    if (!c.free_points.empty()) return PrimeModulus(c.free_points.front().coords.front().modulus());
    throw std::invalid_argument("empty configuration carries no modulus");
}

} // namespace

std::vector<Fp> restrict_monomial_to_line(const std::vector<int>& alpha, const Line& l) {
    return restrict_monomial(alpha, l, FpCtx{PrimeModulus(l.a.coords.front().modulus())});
}

std::vector<std::vector<Fp>> jet_rows(const Jet& j, const MonomialBasis& basis) {
    return jet_rows_impl(j, basis, FpCtx{PrimeModulus(j.axis.a.coords.front().modulus())});
}

std::vector<Fp> point_row(const ProjPoint& pt, const MonomialBasis& basis) {
    return point_row_impl(pt, basis, FpCtx{PrimeModulus(pt.coords.front().modulus())});
}

template <>
ConditionMatrix<Fp> condition_matrix<Fp>(const Configuration& c, int d) {
    if (c.jets.empty() && c.free_points.empty()) {
        // an empty configuration imposes no conditions in any mode
        ConditionMatrix<Fp> cm;
        cm.basis = monomial_basis(c.n, d);
        cm.matrix = Matrix<Fp>(0, cm.basis.size(), std::vector<Fp>{});
        return cm;
    }
    return condition_matrix_impl(c, d, FpCtx{modulus_of(c)});
}

template <>
ConditionMatrix<BigInt> condition_matrix<BigInt>(const Configuration& c, int d) {
    return condition_matrix_impl(c, d, BigIntCtx{});
}

template <typename T>
std::string dump_with_header(const ConditionMatrix<T>& cm, int n, int d,
                             std::uint64_t p, std::uint64_t seed, const Weight& w) {
    std::ostringstream os;
    os << "# n=" << n << " d=" << d << " p=" << p << " seed=" << seed
       << " weight=" << w.to_string() << '\n';
    os << cm.matrix.dump();
    return os.str();
}

template std::string dump_with_header<Fp>(const ConditionMatrix<Fp>&, int, int,
                                          std::uint64_t, std::uint64_t, const Weight&);
template std::string dump_with_header<BigInt>(const ConditionMatrix<BigInt>&, int, int,
                                              std::uint64_t, std::uint64_t, const Weight&);

} // namespace jetrank
