#include "addchow/qmatrix.hpp"

#include <omp.h>

#include <sstream>

#include "addchow/error.hpp"

namespace addchow {

QMatrix::QMatrix(int rows, int cols) : rows_(rows), cols_(cols) {
    if (rows < 0 || cols < 0) throw DomainError("matrix dimensions must be non-negative");
    data_.assign(static_cast<size_t>(rows) * static_cast<size_t>(cols), Rat(0));
}

QMatrix QMatrix::identity(int n) {
    QMatrix m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

QMatrix QMatrix::from_rows(const std::vector<std::vector<Rat>>& rows) {
    const int r = static_cast<int>(rows.size());
    const int c = r == 0 ? 0 : static_cast<int>(rows[0].size());
    QMatrix m(r, c);
    for (int i = 0; i < r; ++i) {
        if (static_cast<int>(rows[static_cast<size_t>(i)].size()) != c)
            throw DomainError("ragged row list");
        for (int j = 0; j < c; ++j) m.at(i, j) = rows[static_cast<size_t>(i)][static_cast<size_t>(j)];
    }
    return m;
}

QMatrix QMatrix::from_columns(const std::vector<std::vector<Rat>>& cols) {
    const int c = static_cast<int>(cols.size());
    const int r = c == 0 ? 0 : static_cast<int>(cols[0].size());
    QMatrix m(r, c);
    for (int j = 0; j < c; ++j) {
        if (static_cast<int>(cols[static_cast<size_t>(j)].size()) != r)
            throw DomainError("ragged column list");
        for (int i = 0; i < r; ++i) m.at(i, j) = cols[static_cast<size_t>(j)][static_cast<size_t>(i)];
    }
    return m;
}

QMatrix QMatrix::operator*(const QMatrix& o) const {
    if (cols_ != o.rows_) throw DomainError("matrix product shape mismatch");
    QMatrix out(rows_, o.cols_);
    for (int i = 0; i < rows_; ++i)
        for (int k = 0; k < cols_; ++k) {
            const Rat& aik = at(i, k);
            if (aik == 0) continue;
            for (int j = 0; j < o.cols_; ++j)
                if (o.at(k, j) != 0) out.at(i, j) += aik * o.at(k, j);
        }
    return out;
}

QMatrix QMatrix::operator+(const QMatrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw DomainError("matrix sum shape mismatch");
    QMatrix out(rows_, cols_);
    for (size_t i = 0; i < data_.size(); ++i) out.data_[i] = data_[i] + o.data_[i];
    return out;
}

QMatrix QMatrix::operator-(const QMatrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw DomainError("matrix difference shape mismatch");
    QMatrix out(rows_, cols_);
    for (size_t i = 0; i < data_.size(); ++i) out.data_[i] = data_[i] - o.data_[i];
    return out;
}

QMatrix QMatrix::scaled(const Rat& c) const {
    QMatrix out(rows_, cols_);
    for (size_t i = 0; i < data_.size(); ++i) out.data_[i] = data_[i] * c;
    return out;
}

bool QMatrix::operator==(const QMatrix& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
}

bool QMatrix::is_zero() const {
    for (const auto& x : data_)
        if (x != 0) return false;
    return true;
}

QMatrix QMatrix::transpose() const {
    QMatrix out(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) out.at(j, i) = at(i, j);
    return out;
}

QMatrix QMatrix::hstack(const QMatrix& o) const {
    if (rows_ != o.rows_) throw DomainError("hstack row mismatch");
    QMatrix out(rows_, cols_ + o.cols_);
    for (int i = 0; i < rows_; ++i) {
        for (int j = 0; j < cols_; ++j) out.at(i, j) = at(i, j);
        for (int j = 0; j < o.cols_; ++j) out.at(i, cols_ + j) = o.at(i, j);
    }
    return out;
}

std::vector<Rat> QMatrix::apply(const std::vector<Rat>& v) const {
    if (static_cast<int>(v.size()) != cols_) throw DomainError("matrix-vector shape mismatch");
    std::vector<Rat> out(static_cast<size_t>(rows_), Rat(0));
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j)
            if (at(i, j) != 0) out[static_cast<size_t>(i)] += at(i, j) * v[static_cast<size_t>(j)];
    return out;
}

std::vector<Rat> QMatrix::column(int j) const {
    if (j < 0 || j >= cols_) throw DomainError("column index out of range");
    std::vector<Rat> out(static_cast<size_t>(rows_));
    for (int i = 0; i < rows_; ++i) out[static_cast<size_t>(i)] = at(i, j);
    return out;
}

Echelon QMatrix::reduced_echelon_serial() const {
    Echelon e{*this, {}};
    QMatrix& m = e.rref;
    int lead = 0;
    for (int col = 0; col < cols_ && lead < rows_; ++col) {
        int piv = -1;
        for (int r = lead; r < rows_; ++r)
            if (m.at(r, col) != 0) {
                piv = r;
                break;
            }
        if (piv < 0) continue;
        if (piv != lead)
            for (int j = 0; j < cols_; ++j) std::swap(m.at(piv, j), m.at(lead, j));
        const Rat inv = 1 / m.at(lead, col);
        for (int j = col; j < cols_; ++j) m.at(lead, j) *= inv;
        for (int r = 0; r < rows_; ++r) {
            if (r == lead || m.at(r, col) == 0) continue;
            const Rat f = m.at(r, col);
            for (int j = col; j < cols_; ++j) m.at(r, j) -= f * m.at(lead, j);
        }
        e.pivot_cols.push_back(col);
        ++lead;
    }
    return e;
}

Echelon QMatrix::reduced_echelon_parallel() const {
    Echelon e{*this, {}};
    QMatrix& m = e.rref;
    int lead = 0;
    for (int col = 0; col < cols_ && lead < rows_; ++col) {
        int piv = -1;
        for (int r = lead; r < rows_; ++r)
            if (m.at(r, col) != 0) {
                piv = r;
                break;
            }
        if (piv < 0) continue;
        if (piv != lead)
            for (int j = 0; j < cols_; ++j) std::swap(m.at(piv, j), m.at(lead, j));
        const Rat inv = 1 / m.at(lead, col);
#pragma omp parallel for schedule(static)
        for (int j = col; j < cols_; ++j) m.at(lead, j) *= inv;
        // rows are eliminated independently against the frozen pivot row
#pragma omp parallel for schedule(static)
        for (int r = 0; r < rows_; ++r) {
            if (r == lead || m.at(r, col) == 0) continue;
            const Rat f = m.at(r, col);
            for (int j = col; j < cols_; ++j) m.at(r, j) -= f * m.at(lead, j);
        }
        e.pivot_cols.push_back(col);
        ++lead;
    }
    return e;
}

Echelon QMatrix::reduced_echelon(bool parallel) const {
    return parallel ? reduced_echelon_parallel() : reduced_echelon_serial();
}

int QMatrix::rank(bool parallel) const {
    return static_cast<int>(reduced_echelon(parallel).pivot_cols.size());
}

std::vector<int> QMatrix::pivot_columns() const { return reduced_echelon().pivot_cols; }

std::vector<std::vector<Rat>> QMatrix::kernel_basis() const {
    Echelon e = reduced_echelon();
    std::vector<bool> is_pivot(static_cast<size_t>(cols_), false);
    for (int c : e.pivot_cols) is_pivot[static_cast<size_t>(c)] = true;
    std::vector<std::vector<Rat>> basis;
    for (int free = 0; free < cols_; ++free) {
        if (is_pivot[static_cast<size_t>(free)]) continue;
        std::vector<Rat> v(static_cast<size_t>(cols_), Rat(0));
        v[static_cast<size_t>(free)] = 1;
        for (size_t r = 0; r < e.pivot_cols.size(); ++r)
            v[static_cast<size_t>(e.pivot_cols[r])] = -e.rref.at(static_cast<int>(r), free);
        basis.push_back(std::move(v));
    }
    return basis;
}

std::optional<std::vector<Rat>> QMatrix::solve(const std::vector<Rat>& b) const {
    if (static_cast<int>(b.size()) != rows_) throw DomainError("solve shape mismatch");
    QMatrix rhs(rows_, 1);
    for (int i = 0; i < rows_; ++i) rhs.at(i, 0) = b[static_cast<size_t>(i)];
    Echelon e = hstack(rhs).reduced_echelon();
    for (int c : e.pivot_cols)
        if (c == cols_) return std::nullopt;  // inconsistent system
    std::vector<Rat> x(static_cast<size_t>(cols_), Rat(0));
    for (size_t r = 0; r < e.pivot_cols.size(); ++r)
        x[static_cast<size_t>(e.pivot_cols[r])] = e.rref.at(static_cast<int>(r), cols_);
    return x;
}

std::string QMatrix::str() const {
    std::ostringstream os;
    for (int i = 0; i < rows_; ++i) {
        os << (i == 0 ? "[" : " ");
        for (int j = 0; j < cols_; ++j) {
            if (j) os << " ";
            os << at(i, j).get_str();
        }
        os << (i + 1 == rows_ ? "]" : "\n");
    }
    if (rows_ == 0) os << "[]";
    return os.str();
}

}  // namespace addchow
