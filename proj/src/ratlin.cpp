#include "chern/ratlin.hpp"

#include <cstddef>

#include "chern/errors.hpp"

namespace chern {

namespace {

// Reduce m to row echelon form in place; returns the pivot columns.
std::vector<size_t> echelonize(RatMatrix& m) {
    std::vector<size_t> pivots;
    if (m.empty())
        return pivots;
    size_t cols = m[0].size();
    size_t row = 0;
    for (size_t col = 0; col < cols && row < m.size(); ++col) {
        size_t pivot = row;
        while (pivot < m.size() && m[pivot][col] == 0)
            ++pivot;  // first nonzero pivot; magnitude is meaningless over Q
        if (pivot == m.size())
            continue;
        std::swap(m[row], m[pivot]);
        Rational inv = m[row][col];
        for (size_t c = col; c < cols; ++c)
            m[row][c] /= inv;
        for (size_t r = 0; r < m.size(); ++r) {
            if (r == row || m[r][col] == 0)
                continue;
            Rational factor = m[r][col];
            for (size_t c = col; c < cols; ++c)
                m[r][c] -= factor * m[row][c];
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

}  // namespace

int rank(RatMatrix m) {
    return static_cast<int>(echelonize(m).size());
}

std::optional<RatVector> solve(RatMatrix a, RatVector b) {
    size_t rows = a.size();
    if (rows != b.size())
        throw PreconditionError("solve: size mismatch");
    size_t cols = rows ? a[0].size() : 0;
    for (size_t r = 0; r < rows; ++r)
        a[r].push_back(b[r]);
    std::vector<size_t> pivots = echelonize(a);
    // inconsistent if the augmented column became a pivot
    if (!pivots.empty() && pivots.back() == cols)
        return std::nullopt;
    RatVector x(cols, Rational(0));
    for (size_t i = 0; i < pivots.size(); ++i)
        x[pivots[i]] = a[i][cols];
    return x;
}

bool in_row_span(const RatMatrix& rows, const RatVector& v) {
    // v in span(rows)  <=>  the transposed system  rows^T x = v  is solvable
    size_t n = v.size();
    RatMatrix at(n, RatVector(rows.size(), Rational(0)));
    for (size_t r = 0; r < rows.size(); ++r) {
        if (rows[r].size() != n)
            throw PreconditionError("in_row_span: size mismatch");
        for (size_t c = 0; c < n; ++c)
            at[c][r] = rows[r][c];
    }
    return solve(std::move(at), v).has_value();
}

}  // namespace chern
