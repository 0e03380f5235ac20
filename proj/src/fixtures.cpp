#include "addchow/fixtures.hpp"

#include <random>
#include <tuple>

#include "addchow/error.hpp"

namespace addchow {

namespace {

QMatrix random_elementary_product(std::mt19937_64& rng, int n) {
    QMatrix m = QMatrix::identity(n);
    if (n <= 1) return m;
    std::uniform_int_distribution<int> row(0, n - 1);
    std::uniform_int_distribution<int> kind(0, 2);
    std::uniform_int_distribution<int> coef(-2, 2);
    const int ops = 2 * n;
    for (int k = 0; k < ops; ++k) {
        int i = row(rng), j = row(rng);
        if (i == j) continue;
        switch (kind(rng)) {
            case 0: {  // add multiple of row j to row i
                const Rat f(coef(rng));
                for (int c = 0; c < n; ++c) m.at(i, c) += f * m.at(j, c);
                break;
            }
            case 1:  // swap rows
                for (int c = 0; c < n; ++c) std::swap(m.at(i, c), m.at(j, c));
                break;
            default:  // negate a row
                for (int c = 0; c < n; ++c) m.at(i, c) = -m.at(i, c);
                break;
        }
    }
    return m;
}

QMatrix inverse_of(const QMatrix& p) {
    const int n = p.rows();
    Echelon e = p.hstack(QMatrix::identity(n)).reduced_echelon();
    // the identity block keeps [P|I] at full row rank, so a singular P shows
    // up as a pivot escaping into the right block, not as a missing pivot
    if (static_cast<int>(e.pivot_cols.size()) != n || e.pivot_cols.back() >= n)
        throw DomainError("matrix is singular");
    QMatrix inv(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) inv.at(i, j) = e.rref.at(i, n + j);
    return inv;
}

struct Assembly {
    std::map<int, int> dims;
    // sparse entries: (degree, target index, source index) -> value
    std::map<int, std::vector<std::tuple<int, int, int>>> b_entries;  // V_n -> V_{n-1}
    std::map<int, std::vector<std::tuple<int, int, int>>> B_entries;  // V_n -> V_{n+1}

    int grow(int degree, int by) {
        int at = dims[degree];
        dims[degree] += by;
        return at;
    }
};

}  // namespace

QMatrix random_invertible(unsigned long long seed, int n) {
    std::mt19937_64 rng(seed);
    return random_elementary_product(rng, n);
}

MixedComplex random_mixed_complex(unsigned long long seed, int max_total_dim) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> degree_at(0, 5);
    std::uniform_int_distribution<int> piece_kind(0, 3);
    std::uniform_int_distribution<int> piece_count(1, 6);

    Assembly a;
    int total = 0;
    const int pieces = piece_count(rng);
    for (int p = 0; p < pieces; ++p) {
        const int n = degree_at(rng);
        switch (piece_kind(rng)) {
            case 0: {  // free generator
                if (total + 1 > max_total_dim) break;
                a.grow(n, 1);
                total += 1;
                break;
            }
            case 1: {  // b-pair: b maps the degree-n generator onto degree n-1
                if (total + 2 > max_total_dim) break;
                int u = a.grow(n - 1, 1);
                int q = a.grow(n, 1);
                a.b_entries[n].emplace_back(u, q, 1);
                total += 2;
                break;
            }
            case 2: {  // B-pair: B maps the degree-n generator onto degree n+1
                if (total + 2 > max_total_dim) break;
                int u = a.grow(n, 1);
                int v = a.grow(n + 1, 1);
                a.B_entries[n].emplace_back(v, u, 1);
                total += 2;
                break;
            }
            default: {  // interacting piece: u | p, v | q with
                        // b: p -> u, q -> -v and B: u -> v, p -> q
                if (total + 4 > max_total_dim) break;
                int u = a.grow(n, 1);
                int pp = a.grow(n + 1, 1);
                int v = a.grow(n + 1, 1);
                int q = a.grow(n + 2, 1);
                a.b_entries[n + 1].emplace_back(u, pp, 1);
                a.b_entries[n + 2].emplace_back(v, q, -1);
                a.B_entries[n].emplace_back(v, u, 1);
                a.B_entries[n + 1].emplace_back(q, pp, 1);
                total += 4;
                break;
            }
        }
    }
    if (total == 0) {  // guarantee a nonempty fixture
        a.grow(0, 1);
        total = 1;
    }

    MixedComplex mc;
    for (const auto& [n, d] : a.dims)
        if (d > 0) mc.space.dims[n] = d;

    auto dim = [&](int n) { return mc.space.dim(n); };
    for (const auto& [n, entries] : a.b_entries) {
        QMatrix m(dim(n - 1), dim(n));
        for (const auto& [i, j, v] : entries) m.at(i, j) = v;
        mc.b[n] = m;
    }
    for (const auto& [n, entries] : a.B_entries) {
        QMatrix m(dim(n + 1), dim(n));
        for (const auto& [i, j, v] : entries) m.at(i, j) = v;
        mc.B[n] = m;
    }

    // conjugate degreewise by random invertible integer matrices
    std::map<int, QMatrix> P, Pinv;
    for (const auto& [n, d] : mc.space.dims) {
        P[n] = random_elementary_product(rng, d);
        Pinv[n] = inverse_of(P[n]);
    }
    auto p_at = [&](int n) {
        auto it = P.find(n);
        return it == P.end() ? QMatrix::identity(mc.space.dim(n)) : it->second;
    };
    auto pinv_at = [&](int n) {
        auto it = Pinv.find(n);
        return it == Pinv.end() ? QMatrix::identity(mc.space.dim(n)) : it->second;
    };
    MixedComplex out;
    out.space = mc.space;
    for (int n = mc.space.lo(); n <= mc.space.hi() + 1; ++n) {
        QMatrix nb = p_at(n - 1) * mc.b_at(n) * pinv_at(n);
        QMatrix nB = p_at(n + 1) * mc.B_at(n) * pinv_at(n);
        if (!nb.is_zero()) out.b[n] = std::move(nb);
        if (!nB.is_zero()) out.B[n] = std::move(nB);
    }
    return out;
}

}  // namespace addchow
