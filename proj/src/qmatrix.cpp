#include "bsarr/qmatrix.hpp"

#include "bsarr/errors.hpp"

namespace bsarr {

QMatrix QMatrix::identity(int n) {
    QMatrix m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = Rational(1);
    return m;
}

QMatrix QMatrix::from_rows(const std::vector<std::vector<Rational>>& rows) {
    int r = static_cast<int>(rows.size());
    int c = r == 0 ? 0 : static_cast<int>(rows[0].size());
    QMatrix m(r, c);
    for (int i = 0; i < r; ++i) {
        if (static_cast<int>(rows[i].size()) != c) throw StructuralError("ragged matrix rows");
        for (int j = 0; j < c; ++j) m.at(i, j) = rows[i][j];
    }
    return m;
}

std::vector<Rational> QMatrix::row(int i) const {
    std::vector<Rational> r(cols_);
    for (int j = 0; j < cols_; ++j) r[j] = at(i, j);
    return r;
}

QMatrix QMatrix::rref(std::vector<int>* pivot_cols) const {
    QMatrix m = *this;
    std::vector<int> pivots;
    int r = 0;
    for (int c = 0; c < cols_ && r < rows_; ++c) {
        int p = -1;
        for (int i = r; i < rows_; ++i) {
            if (!m.at(i, c).is_zero()) {
                p = i;
                break;
            }
        }
        if (p < 0) continue;
        for (int j = 0; j < cols_; ++j) std::swap(m.at(r, j), m.at(p, j));
        Rational inv = m.at(r, c).reciprocal();
        for (int j = c; j < cols_; ++j) m.at(r, j) *= inv;
        for (int i = 0; i < rows_; ++i) {
            if (i == r || m.at(i, c).is_zero()) continue;
            Rational f = m.at(i, c);
            for (int j = c; j < cols_; ++j) m.at(i, j) -= f * m.at(r, j);
        }
        pivots.push_back(c);
        ++r;
    }
    QMatrix out(r, cols_);
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < cols_; ++j) out.at(i, j) = m.at(i, j);
    if (pivot_cols) *pivot_cols = pivots;
    return out;
}

int QMatrix::rank() const {
    std::vector<int> p;
    rref(&p);
    return static_cast<int>(p.size());
}

std::vector<std::vector<Rational>> QMatrix::kernel_basis() const {
    std::vector<int> pivots;
    QMatrix r = rref(&pivots);
    std::vector<bool> is_pivot(cols_, false);
    for (int c : pivots) is_pivot[c] = true;
    std::vector<std::vector<Rational>> basis;
    for (int f = 0; f < cols_; ++f) {
        if (is_pivot[f]) continue;
        std::vector<Rational> v(cols_);
        v[f] = Rational(1);
        for (size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -r.at(static_cast<int>(i), f);
        basis.push_back(std::move(v));
    }
    return basis;
}

Rational QMatrix::det() const {
    if (rows_ != cols_) throw StructuralError("determinant of non-square matrix");
    QMatrix m = *this;
    Rational d(1);
    for (int c = 0; c < cols_; ++c) {
        int p = -1;
        for (int i = c; i < rows_; ++i) {
            if (!m.at(i, c).is_zero()) {
                p = i;
                break;
            }
        }
        if (p < 0) return Rational(0);
        if (p != c) {
            for (int j = 0; j < cols_; ++j) std::swap(m.at(c, j), m.at(p, j));
            d = -d;
        }
        d *= m.at(c, c);
        Rational inv = m.at(c, c).reciprocal();
        for (int i = c + 1; i < rows_; ++i) {
            if (m.at(i, c).is_zero()) continue;
            Rational f = m.at(i, c) * inv;
            for (int j = c; j < cols_; ++j) m.at(i, j) -= f * m.at(c, j);
        }
    }
    return d;
}

std::optional<std::vector<Rational>> QMatrix::solve(const std::vector<Rational>& b) const {
    if (static_cast<int>(b.size()) != rows_) throw StructuralError("solve: size mismatch");
    QMatrix aug(rows_, cols_ + 1);
    for (int i = 0; i < rows_; ++i) {
        for (int j = 0; j < cols_; ++j) aug.at(i, j) = at(i, j);
        aug.at(i, cols_) = b[i];
    }
    std::vector<int> pivots;
    QMatrix r = aug.rref(&pivots);
    std::vector<Rational> x(cols_);
    for (size_t i = 0; i < pivots.size(); ++i) {
        if (pivots[i] == cols_) return std::nullopt;  // inconsistent
        x[pivots[i]] = r.at(static_cast<int>(i), cols_);
    }
    return x;
}

}  // namespace bsarr
