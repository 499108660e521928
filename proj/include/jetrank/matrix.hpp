#pragma once

#include <cstddef>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "jetrank/scalar.hpp"

namespace jetrank {

/// Dense row-major matrix over one scalar mode. Instantiated with Fp
/// (all entries must share one modulus, checked at construction) or BigInt.
template <typename T>
class Matrix {
  public:
    Matrix() : rows_(0), cols_(0) {}

    Matrix(std::size_t rows, std::size_t cols, const T& fill)
        : rows_(rows), cols_(cols), entries_(rows * cols, fill) {}

    Matrix(std::size_t rows, std::size_t cols, std::vector<T> entries)
        : rows_(rows), cols_(cols), entries_(std::move(entries)) {
        if (entries_.size() != rows_ * cols_)
            throw std::invalid_argument("entry count does not match rows*cols");
        check_single_mode();
    }

    static Matrix from_rows(const std::vector<std::vector<T>>& rows) {
        if (rows.empty()) return Matrix();
        const std::size_t cols = rows.front().size();
        std::vector<T> entries;
        entries.reserve(rows.size() * cols);
        for (const auto& r : rows) {
            if (r.size() != cols) throw std::invalid_argument("ragged rows");
            entries.insert(entries.end(), r.begin(), r.end());
        }
        return Matrix(rows.size(), cols, std::move(entries));
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    const T& operator()(std::size_t i, std::size_t j) const {
        return entries_[i * cols_ + j];
    }
    T& operator()(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }

    void swap_rows(std::size_t i, std::size_t j) {
        if (i == j) return;
        for (std::size_t c = 0; c < cols_; ++c)
            std::swap((*this)(i, c), (*this)(j, c));
    }

    Matrix transpose() const {
        Matrix t;
        t.rows_ = cols_;
        t.cols_ = rows_;
        t.entries_.resize(entries_.size());
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j)
                t(j, i) = (*this)(i, j);
        return t;
    }

    /// Vertical stack; column counts must agree (an empty matrix is neutral).
    static Matrix vstack(const Matrix& top, const Matrix& bottom) {
        if (top.rows_ == 0) return bottom;
        if (bottom.rows_ == 0) return top;
        if (top.cols_ != bottom.cols_)
            throw std::invalid_argument("vstack: column mismatch");
        Matrix r;
        r.rows_ = top.rows_ + bottom.rows_;
        r.cols_ = top.cols_;
        r.entries_ = top.entries_;
        r.entries_.insert(r.entries_.end(), bottom.entries_.begin(), bottom.entries_.end());
        return r;
    }

    /// Debug dump: one matrix row per line, entries space-separated,
    /// residues as canonical representatives in [0, p).
    std::string dump() const {
        std::ostringstream os;
        for (std::size_t i = 0; i < rows_; ++i) {
            for (std::size_t j = 0; j < cols_; ++j) {
                if (j) os << ' ';
                os << (*this)(i, j);
            }
            os << '\n';
        }
        return os.str();
    }

  private:
    void check_single_mode() {
        if constexpr (std::is_same_v<T, Fp>) {
            for (const auto& e : entries_) {
                if (e.modulus() != entries_.front().modulus())
                    throw std::invalid_argument("matrix entries mix moduli");
            }
        }
    }

    std::size_t rows_;
    std::size_t cols_;
    std::vector<T> entries_;
};

} // namespace jetrank
