#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "jetrank/geometry.hpp"
#include "jetrank/matrix.hpp"
#include "jetrank/monomial.hpp"

namespace jetrank {

/// Provenance of one condition row.
struct RowLabel {
    enum class Source { jet, free_point };
    Source source;
    int index; // jet or free-point position in configuration order
    int order; // Taylor-coefficient order within a jet; 0 for point rows
};

/// The evaluation map on a configuration: one row per linear condition
/// (jet rows first, configuration order, orders ascending; then point
/// rows), one column per degree-d monomial.
template <typename T>
struct ConditionMatrix {
    Matrix<T> matrix;
    std::vector<RowLabel> row_labels;
    MonomialBasis basis;
};

/// The monomial x^alpha along t -> a + t*b, as d+1 coefficients in GF(p),
/// constant term first.
std::vector<Fp> restrict_monomial_to_line(const std::vector<int>& alpha, const Line& l);

/// Row i (i = 0..length-1) holds the coefficient of (t - t0)^i of each
/// restricted basis monomial. Rows with i > d are zero: a longer jet adds
/// no conditions beyond vanishing of the full restriction. A 0-jet yields
/// no rows.
std::vector<std::vector<Fp>> jet_rows(const Jet& j, const MonomialBasis& basis);

/// Evaluation of every basis monomial at the point's stored representative.
std::vector<Fp> point_row(const ProjPoint& pt, const MonomialBasis& basis);

/// Assemble the full condition matrix in degree d. T = Fp works over
/// GF(p); T = BigInt lifts every coordinate to its canonical integer
/// representative in [0, p) and assembles exactly over the integers.
template <typename T>
ConditionMatrix<T> condition_matrix(const Configuration& c, int d);

/// Dump format of exact_linalg prefixed by one header line recording the
/// instance parameters.
template <typename T>
std::string dump_with_header(const ConditionMatrix<T>& cm, int n, int d,
                             std::uint64_t p, std::uint64_t seed, const Weight& w);

} // namespace jetrank
