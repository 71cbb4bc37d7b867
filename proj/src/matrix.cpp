#include "sheafkit/matrix.hpp"

#include <algorithm>
#include <string>
#include <utility>

#include "sheafkit/errors.hpp"

namespace sheafkit {

RationalMatrix RationalMatrix::identity(std::size_t n) {
    RationalMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

RationalMatrix RationalMatrix::from_rows(const std::vector<RatVec>& rows, std::size_t cols_if_empty) {
    std::size_t cols = rows.empty() ? cols_if_empty : rows.front().size();
    RationalMatrix m(rows.size(), cols);
    for (std::size_t r = 0; r < rows.size(); ++r) {
        if (rows[r].size() != cols) throw DimensionError("ragged rows in matrix literal");
        for (std::size_t c = 0; c < cols; ++c) m.at(r, c) = rows[r][c];
    }
    return m;
}

RationalMatrix RationalMatrix::from_columns(const std::vector<RatVec>& columns, std::size_t rows_if_empty) {
    std::size_t rows = columns.empty() ? rows_if_empty : columns.front().size();
    RationalMatrix m(rows, columns.size());
    for (std::size_t c = 0; c < columns.size(); ++c) {
        if (columns[c].size() != rows) throw DimensionError("ragged columns in matrix literal");
        for (std::size_t r = 0; r < rows; ++r) m.at(r, c) = columns[c][r];
    }
    return m;
}

RatVec RationalMatrix::row(std::size_t r) const {
    RatVec out(cols_);
    for (std::size_t c = 0; c < cols_; ++c) out[c] = at(r, c);
    return out;
}

RatVec RationalMatrix::column(std::size_t c) const {
    RatVec out(rows_);
    for (std::size_t r = 0; r < rows_; ++r) out[r] = at(r, c);
    return out;
}

bool RationalMatrix::is_zero() const {
    return std::all_of(entries_.begin(), entries_.end(), [](const Rational& x) { return x.is_zero(); });
}

RrefResult rref(const RationalMatrix& input) {
    RationalMatrix m = input;
    std::vector<std::size_t> pivots;
    std::size_t lead_row = 0;
    for (std::size_t col = 0; col < m.cols() && lead_row < m.rows(); ++col) {
        std::size_t p = lead_row;
        while (p < m.rows() && m.at(p, col).is_zero()) ++p;
        if (p == m.rows()) continue;
        if (p != lead_row) {
            for (std::size_t c = 0; c < m.cols(); ++c) std::swap(m.at(p, c), m.at(lead_row, c));
        }
        Rational inv = m.at(lead_row, col).reciprocal();
        for (std::size_t c = col; c < m.cols(); ++c) m.at(lead_row, c) *= inv;
        for (std::size_t r = 0; r < m.rows(); ++r) {
            if (r == lead_row || m.at(r, col).is_zero()) continue;
            Rational factor = m.at(r, col);
            for (std::size_t c = col; c < m.cols(); ++c) m.at(r, c) -= factor * m.at(lead_row, c);
        }
        pivots.push_back(col);
        ++lead_row;
    }
    return {std::move(m), std::move(pivots)};
}

std::size_t rank(const RationalMatrix& m) { return rref(m).pivot_columns.size(); }

std::vector<RatVec> nullspace_basis(const RationalMatrix& m) {
    RrefResult red = rref(m);
    std::vector<bool> is_pivot(m.cols(), false);
    for (std::size_t c : red.pivot_columns) is_pivot[c] = true;

    std::vector<RatVec> basis;
    for (std::size_t free = 0; free < m.cols(); ++free) {
        if (is_pivot[free]) continue;
        RatVec x(m.cols());
        x[free] = 1;
        for (std::size_t r = 0; r < red.pivot_columns.size(); ++r) {
            x[red.pivot_columns[r]] = -red.matrix.at(r, free);
        }
        basis.push_back(std::move(x));
    }
    return basis;
}

std::optional<RatVec> solve_exact(const RationalMatrix& m, const RatVec& b) {
    if (b.size() != m.rows()) throw DimensionError("right-hand side length does not match row count");
    RationalMatrix aug(m.rows(), m.cols() + 1);
    for (std::size_t r = 0; r < m.rows(); ++r) {
        for (std::size_t c = 0; c < m.cols(); ++c) aug.at(r, c) = m.at(r, c);
        aug.at(r, m.cols()) = b[r];
    }
    RrefResult red = rref(aug);
    if (!red.pivot_columns.empty() && red.pivot_columns.back() == m.cols()) return std::nullopt;
    RatVec x(m.cols());
    for (std::size_t r = 0; r < red.pivot_columns.size(); ++r) {
        x[red.pivot_columns[r]] = red.matrix.at(r, m.cols());
    }
    return x;
}

RationalMatrix compose(const RationalMatrix& a, const RationalMatrix& b) {
    if (a.cols() != b.rows()) {
        throw DimensionError("cannot compose " + std::to_string(a.rows()) + "x" + std::to_string(a.cols()) +
                             " with " + std::to_string(b.rows()) + "x" + std::to_string(b.cols()));
    }
    RationalMatrix out(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t k = 0; k < a.cols(); ++k) {
            if (a.at(i, k).is_zero()) continue;
            for (std::size_t j = 0; j < b.cols(); ++j) {
                if (b.at(k, j).is_zero()) continue;
                out.at(i, j) += a.at(i, k) * b.at(k, j);
            }
        }
    }
    return out;
}

RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b) { return compose(a, b); }

RatVec operator*(const RationalMatrix& m, const RatVec& x) {
    if (x.size() != m.cols()) throw DimensionError("vector length does not match column count");
    RatVec out(m.rows());
    for (std::size_t r = 0; r < m.rows(); ++r) {
        for (std::size_t c = 0; c < m.cols(); ++c) {
            if (!m.at(r, c).is_zero() && !x[c].is_zero()) out[r] += m.at(r, c) * x[c];
        }
    }
    return out;
}

bool is_zero_vec(const RatVec& v) {
    return std::all_of(v.begin(), v.end(), [](const Rational& x) { return x.is_zero(); });
}

}  // namespace sheafkit
