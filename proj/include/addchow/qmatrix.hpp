#pragma once

#include <optional>
#include <string>
#include <vector>

#include "addchow/poly.hpp"

namespace addchow {

struct Echelon;

// Dense exact-rational matrix. Row reduction comes in two interchangeable
// implementations: a plain serial one kept as the reference, and an
// OpenMP-parallel one used by default. Both produce the (unique) reduced
// row echelon form, so they can be compared bit-for-bit.
class QMatrix {
public:
    QMatrix() = default;
    QMatrix(int rows, int cols);

    static QMatrix identity(int n);
    static QMatrix from_rows(const std::vector<std::vector<Rat>>& rows);
    static QMatrix from_columns(const std::vector<std::vector<Rat>>& cols);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    Rat& at(int i, int j) { return data_[static_cast<size_t>(i) * cols_ + j]; }
    const Rat& at(int i, int j) const {
        return data_[static_cast<size_t>(i) * cols_ + j];
    }

    QMatrix operator*(const QMatrix& o) const;
    QMatrix operator+(const QMatrix& o) const;
    QMatrix operator-(const QMatrix& o) const;
    QMatrix scaled(const Rat& c) const;
    bool operator==(const QMatrix& o) const;
    bool is_zero() const;

    QMatrix transpose() const;
    QMatrix hstack(const QMatrix& o) const;  // same row count
    std::vector<Rat> apply(const std::vector<Rat>& v) const;  // M v
    std::vector<Rat> column(int j) const;

    Echelon reduced_echelon(bool parallel = true) const;
    Echelon reduced_echelon_serial() const;
    Echelon reduced_echelon_parallel() const;

    int rank(bool parallel = true) const;
    std::vector<int> pivot_columns() const;
    // basis of the null space {v : Mv = 0}, one vector per free column
    std::vector<std::vector<Rat>> kernel_basis() const;
    // some x with Mx = b, or nullopt when b is outside the column space
    std::optional<std::vector<Rat>> solve(const std::vector<Rat>& b) const;

    std::string str() const;

private:
    int rows_ = 0, cols_ = 0;
    std::vector<Rat> data_;
};

struct Echelon {
    QMatrix rref;
    std::vector<int> pivot_cols;
};

}  // namespace addchow
