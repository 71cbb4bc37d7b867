#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "sheafkit/rational.hpp"

namespace sheafkit {

using RatVec = std::vector<Rational>;

/// Dense row-major matrix of rationals. Zero-row and zero-column shapes are
/// legal; they represent maps to or from the zero space.
class RationalMatrix {
public:
    RationalMatrix() = default;
    RationalMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), entries_(rows * cols) {}

    static RationalMatrix identity(std::size_t n);
    /// Builds from row vectors; `cols_if_empty` fixes the width of a
    /// zero-row matrix. Throws DimensionError on ragged rows.
    static RationalMatrix from_rows(const std::vector<RatVec>& rows, std::size_t cols_if_empty = 0);
    /// Builds from column vectors; `rows_if_empty` fixes the height of a
    /// zero-column matrix.
    static RationalMatrix from_columns(const std::vector<RatVec>& columns, std::size_t rows_if_empty);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Rational& at(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
    const Rational& at(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }

    RatVec row(std::size_t r) const;
    RatVec column(std::size_t c) const;

    bool is_zero() const;

    friend bool operator==(const RationalMatrix& a, const RationalMatrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.entries_ == b.entries_;
    }
    friend bool operator!=(const RationalMatrix& a, const RationalMatrix& b) { return !(a == b); }

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Rational> entries_;
};

struct RrefResult {
    RationalMatrix matrix;
    std::vector<std::size_t> pivot_columns;
};

/// Reduced row echelon form; exact, no tolerances anywhere.
RrefResult rref(const RationalMatrix& m);

std::size_t rank(const RationalMatrix& m);

/// RREF-canonical basis of {x : m·x = 0}, ordered by ascending free column.
std::vector<RatVec> nullspace_basis(const RationalMatrix& m);

/// Any exact solution of m·x = b, or nullopt when b is outside the column
/// span. Unique when m has full column rank.
std::optional<RatVec> solve_exact(const RationalMatrix& m, const RatVec& b);

/// Exact product a·b. Throws DimensionError when a.cols() != b.rows().
RationalMatrix compose(const RationalMatrix& a, const RationalMatrix& b);
RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b);

/// m·x. Throws DimensionError when x.size() != m.cols().
RatVec operator*(const RationalMatrix& m, const RatVec& x);

bool is_zero_vec(const RatVec& v);

}  // namespace sheafkit
