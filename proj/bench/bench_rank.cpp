// Benchmark: serial reference vs OpenMP-parallel reduced row echelon on random
// dense rational matrices.  Entries are small random fractions, which is the
// regime the homology engine sees (boundary matrices with modest numerators but
// heavy intermediate fraction growth during elimination).
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <random>

#include <omp.h>

#include "addchow/qmatrix.hpp"

using namespace addchow;

namespace {

QMatrix random_matrix(int rows, int cols, std::mt19937_64& rng) {
    std::uniform_int_distribution<int> num(-9, 9);
    std::uniform_int_distribution<int> den(1, 9);
    QMatrix m(rows, cols);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) {
            m.at(i, j) = Rat(num(rng), den(rng));
            m.at(i, j).canonicalize();
        }
    return m;
}

double time_of(const QMatrix& m, bool parallel, int reps, int& rank_out) {
    double best = 1e300;
    for (int r = 0; r < reps; ++r) {
        auto t0 = std::chrono::steady_clock::now();
        Echelon e = parallel ? m.reduced_echelon_parallel() : m.reduced_echelon_serial();
        double s =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
                .count();
        rank_out = static_cast<int>(e.pivot_cols.size());
        if (s < best) best = s;
    }
    return best;
}

} // namespace

int main(int argc, char** argv) {
    int max_size = argc > 1 ? std::atoi(argv[1]) : 160;
    int reps = argc > 2 ? std::atoi(argv[2]) : 3;
    std::mt19937_64 rng(2026);

    std::printf("threads available: %d\n", omp_get_max_threads());
    std::printf("%8s %12s %12s %9s %6s\n", "size", "serial [s]", "parallel [s]",
                "speedup", "rank");
    for (int n = 40; n <= max_size; n += 40) {
        QMatrix m = random_matrix(n, n + n / 4, rng);
        int rank_serial = 0, rank_parallel = 0;
        double ts = time_of(m, false, reps, rank_serial);
        double tp = time_of(m, true, reps, rank_parallel);
        if (rank_serial != rank_parallel ||
            !(m.reduced_echelon_serial().rref == m.reduced_echelon_parallel().rref)) {
            std::printf("size %d: serial and parallel echelon DISAGREE\n", n);
            return 1;
        }
        std::printf("%4dx%-4d %12.4f %12.4f %8.2fx %6d\n", n, n + n / 4, ts, tp,
                    ts / tp, rank_serial);
    }
    return 0;
}
