#include "addchow/rank_oracle.hpp"

#include <vector>

#include "addchow/error.hpp"

namespace addchow {

namespace {

// integer matrix with each input row scaled by the lcm of its denominators;
// row scaling by positive constants does not change the rank
std::vector<std::vector<Int>> integerize(const QMatrix& m) {
    std::vector<std::vector<Int>> out(static_cast<size_t>(m.rows()),
                                      std::vector<Int>(static_cast<size_t>(m.cols())));
    for (int i = 0; i < m.rows(); ++i) {
        Int l = 1;
        for (int j = 0; j < m.cols(); ++j) {
            Int den = m.at(i, j).get_den();
            mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), den.get_mpz_t());
        }
        for (int j = 0; j < m.cols(); ++j) {
            Rat scaled = m.at(i, j) * Rat(l);
            scaled.canonicalize();
            out[static_cast<size_t>(i)][static_cast<size_t>(j)] = scaled.get_num();
        }
    }
    return out;
}

}  // namespace

int bareiss_rank(const QMatrix& m) {
    std::vector<std::vector<Int>> a = integerize(m);
    const int rows = m.rows(), cols = m.cols();
    int rank = 0;
    Int prev = 1;
    for (int col = 0; col < cols && rank < rows; ++col) {
        int piv = -1;
        for (int r = rank; r < rows; ++r)
            if (a[static_cast<size_t>(r)][static_cast<size_t>(col)] != 0) {
                piv = r;
                break;
            }
        if (piv < 0) continue;
        if (piv != rank) std::swap(a[static_cast<size_t>(piv)], a[static_cast<size_t>(rank)]);
        const Int pivot = a[static_cast<size_t>(rank)][static_cast<size_t>(col)];
        for (int r = rank + 1; r < rows; ++r) {
            for (int j = col + 1; j < cols; ++j) {
                Int num = pivot * a[static_cast<size_t>(r)][static_cast<size_t>(j)] -
                          a[static_cast<size_t>(r)][static_cast<size_t>(col)] *
                              a[static_cast<size_t>(rank)][static_cast<size_t>(j)];
                // Bareiss: the previous pivot divides exactly
                Int q;
                mpz_divexact(q.get_mpz_t(), num.get_mpz_t(), prev.get_mpz_t());
                a[static_cast<size_t>(r)][static_cast<size_t>(j)] = q;
            }
            a[static_cast<size_t>(r)][static_cast<size_t>(col)] = 0;
        }
        prev = pivot;
        ++rank;
    }
    return rank;
}

int oracle_homology_dim(int dim, const QMatrix& outgoing, const QMatrix& incoming) {
    if (outgoing.cols() != dim || incoming.rows() != dim)
        throw DomainError("oracle_homology_dim shape mismatch");
    const int ker = dim - bareiss_rank(outgoing);
    const int img = bareiss_rank(incoming);
    return ker - img;
}

}  // namespace addchow
