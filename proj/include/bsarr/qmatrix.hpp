#ifndef BSARR_QMATRIX_HPP
#define BSARR_QMATRIX_HPP

#include <optional>
#include <vector>

#include "bsarr/rational.hpp"

namespace bsarr {

// Dense rational matrix with exact Gaussian elimination.
class QMatrix {
public:
    QMatrix() : rows_(0), cols_(0) {}
    QMatrix(int rows, int cols) : rows_(rows), cols_(cols), a_(rows * cols) {}
    static QMatrix identity(int n);
    static QMatrix from_rows(const std::vector<std::vector<Rational>>& rows);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    Rational& at(int i, int j) { return a_[i * cols_ + j]; }
    const Rational& at(int i, int j) const { return a_[i * cols_ + j]; }
    std::vector<Rational> row(int i) const;

    // Reduced row echelon form; zero rows are dropped. Pivot columns returned
    // in order when requested.
    QMatrix rref(std::vector<int>* pivot_cols = nullptr) const;
    int rank() const;
    std::vector<std::vector<Rational>> kernel_basis() const;
    Rational det() const;  // StructuralError if not square

    // Least structure needed elsewhere: solve A x = b exactly; nullopt when
    // inconsistent. If the solution is not unique, free variables are set to 0.
    std::optional<std::vector<Rational>> solve(const std::vector<Rational>& b) const;

    friend bool operator==(const QMatrix& a, const QMatrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.a_ == b.a_;
    }

private:
    int rows_, cols_;
    std::vector<Rational> a_;
};

}  // namespace bsarr

#endif
