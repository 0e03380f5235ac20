#include "addchow/mixed_complex.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

#include "addchow/error.hpp"

namespace addchow {

int GradedSpace::dim(int n) const {
    auto it = dims.find(n);
    return it == dims.end() ? 0 : it->second;
}

bool GradedSpace::empty() const {
    for (const auto& [n, d] : dims)
        if (d > 0) return false;
    return true;
}

int GradedSpace::lo() const {
    for (const auto& [n, d] : dims)
        if (d > 0) return n;
    return 0;
}

int GradedSpace::hi() const {
    for (auto it = dims.rbegin(); it != dims.rend(); ++it)
        if (it->second > 0) return it->first;
    return -1;
}

int GradedSpace::total_dim() const {
    int t = 0;
    for (const auto& [n, d] : dims) t += d;
    return t;
}

QMatrix MixedComplex::b_at(int n) const {
    auto it = b.find(n);
    if (it != b.end()) return it->second;
    return QMatrix(space.dim(n - 1), space.dim(n));
}

QMatrix MixedComplex::B_at(int n) const {
    auto it = B.find(n);
    if (it != B.end()) return it->second;
    return QMatrix(space.dim(n + 1), space.dim(n));
}

namespace {

bool shape_ok(const QMatrix& m, int rows, int cols) {
    return m.rows() == rows && m.cols() == cols;
}

std::string degree_detail(const char* what, int n) {
    std::ostringstream os;
    os << what << " at degree " << n;
    return os.str();
}

}  // namespace

ValidationReport validate(const MixedComplex& m) {
    for (const auto& [n, mat] : m.b)
        if (!shape_ok(mat, m.space.dim(n - 1), m.space.dim(n)))
            return {false, degree_detail("b matrix shape mismatch", n)};
    for (const auto& [n, mat] : m.B)
        if (!shape_ok(mat, m.space.dim(n + 1), m.space.dim(n)))
            return {false, degree_detail("B matrix shape mismatch", n)};
    if (m.space.empty()) return {true, "zero complex"};
    const int lo = m.space.lo(), hi = m.space.hi();
    for (int n = lo; n <= hi; ++n) {
        if (!(m.b_at(n - 1) * m.b_at(n)).is_zero())
            return {false, degree_detail("b.b != 0", n)};
        if (!(m.B_at(n + 1) * m.B_at(n)).is_zero())
            return {false, degree_detail("B.B != 0", n)};
        if (!(m.b_at(n + 1) * m.B_at(n) + m.B_at(n - 1) * m.b_at(n)).is_zero())
            return {false, degree_detail("bB + Bb != 0", n)};
    }
    return {true, "mixed complex axioms hold"};
}

int ChainComplex::dim(int n) const {
    auto it = dims.find(n);
    return it == dims.end() ? 0 : it->second;
}

QMatrix ChainComplex::d_at(int n) const {
    auto it = d.find(n);
    if (it != d.end()) return it->second;
    return QMatrix(dim(n - 1), dim(n));
}

ValidationReport validate_chain(const ChainComplex& c) {
    for (const auto& [n, mat] : c.d)
        if (!shape_ok(mat, c.dim(n - 1), c.dim(n)))
            return {false, degree_detail("d matrix shape mismatch", n)};
    for (const auto& [n, mat] : c.d) {
        (void)mat;
        if (!(c.d_at(n - 1) * c.d_at(n)).is_zero())
            return {false, degree_detail("d.d != 0", n)};
    }
    return {true, "chain complex axioms hold"};
}

HomologyData homology(const ChainComplex& c, int n) {
    HomologyData h;
    h.chain_dim = c.dim(n);
    h.boundaries = c.d_at(n + 1);
    QMatrix d_out = c.d_at(n);
    std::vector<std::vector<Rat>> kernel = d_out.kernel_basis();
    QMatrix K = QMatrix::from_columns(kernel);
    if (K.rows() == 0) K = QMatrix(h.chain_dim, 0);
    // pick the kernel vectors whose classes extend the boundary span
    Echelon e = h.boundaries.hstack(K).reduced_echelon();
    std::vector<std::vector<Rat>> reps;
    for (int c_idx : e.pivot_cols)
        if (c_idx >= h.boundaries.cols())
            reps.push_back(kernel[static_cast<size_t>(c_idx - h.boundaries.cols())]);
    h.dim = static_cast<int>(reps.size());
    h.reps = reps.empty() ? QMatrix(h.chain_dim, 0) : QMatrix::from_columns(reps);
    return h;
}

std::vector<Rat> class_coords(const HomologyData& h, const std::vector<Rat>& z) {
    auto sol = h.reps.hstack(h.boundaries).solve(z);
    if (!sol)
        throw DomainError("class_coords: vector is not a cycle of the represented degree");
    return std::vector<Rat>(sol->begin(), sol->begin() + h.dim);
}

ChainComplex column_complex(const MixedComplex& m) {
    ChainComplex c;
    c.dims = m.space.dims;
    c.labels = m.space.labels;
    for (const auto& [n, mat] : m.b) c.d[n] = mat;
    return c;
}

namespace {

// degrees of the direct summands of Tot_n, component 0 first
std::vector<int> tot_components(const MixedComplex& m, int n) {
    std::vector<int> comps;
    if (m.space.empty()) return comps;
    const int lo = m.space.lo();
    for (int q = n; q >= lo; q -= 2) comps.push_back(q);
    return comps;
}

std::vector<int> tot_offsets(const MixedComplex& m, const std::vector<int>& comps) {
    std::vector<int> off(comps.size() + 1, 0);
    for (size_t i = 0; i < comps.size(); ++i)
        off[i + 1] = off[i] + m.space.dim(comps[i]);
    return off;
}

void copy_block(QMatrix& dst, const QMatrix& src, int row0, int col0) {
    for (int i = 0; i < src.rows(); ++i)
        for (int j = 0; j < src.cols(); ++j)
            if (src.at(i, j) != 0) dst.at(row0 + i, col0 + j) = src.at(i, j);
}

}  // namespace

int tot_dim(const MixedComplex& m, int n) {
    int t = 0;
    for (int q : tot_components(m, n)) t += m.space.dim(q);
    return t;
}

QMatrix tot_d(const MixedComplex& m, int n) {
    std::vector<int> src = tot_components(m, n);
    std::vector<int> dst = tot_components(m, n - 1);
    std::vector<int> soff = tot_offsets(m, src);
    std::vector<int> doff = tot_offsets(m, dst);
    QMatrix out(tot_dim(m, n - 1), tot_dim(m, n));
    // target component j receives b(source comp j) + B(source comp j+1)
    for (size_t j = 0; j < dst.size(); ++j) {
        if (j < src.size()) copy_block(out, m.b_at(src[j]), doff[j], soff[j]);
        if (j + 1 < src.size()) copy_block(out, m.B_at(src[j + 1]), doff[j], soff[j + 1]);
    }
    return out;
}

ChainComplex totalize(const MixedComplex& m, int lo, int hi) {
    ChainComplex c;
    for (int n = lo - 1; n <= hi; ++n) c.dims[n] = tot_dim(m, n);
    for (int n = lo; n <= hi; ++n) c.d[n] = tot_d(m, n);
    for (int n = lo; n <= hi; ++n) {
        std::vector<std::string> lab;
        std::vector<int> comps = tot_components(m, n);
        for (size_t i = 0; i < comps.size(); ++i) {
            const int q = comps[i];
            auto it = m.space.labels.find(q);
            for (int k = 0; k < m.space.dim(q); ++k) {
                std::ostringstream os;
                os << "i=" << i << "|deg=" << q << "|";
                if (it != m.space.labels.end() &&
                    k < static_cast<int>(it->second.size()))
                    os << it->second[static_cast<size_t>(k)];
                else
                    os << "e" << k;
                lab.push_back(os.str());
            }
        }
        if (!lab.empty()) c.labels[n] = std::move(lab);
    }
    return c;
}

namespace {

QMatrix induced_map(const HomologyData& src, const HomologyData& dst,
                    const std::function<std::vector<Rat>(const std::vector<Rat>&)>& f) {
    QMatrix out(dst.dim, src.dim);
    for (int j = 0; j < src.dim; ++j) {
        std::vector<Rat> rep = src.reps.column(j);
        std::vector<Rat> cls = class_coords(dst, f(rep));
        for (int i = 0; i < dst.dim; ++i) out.at(i, j) = cls[static_cast<size_t>(i)];
    }
    return out;
}

}  // namespace

LESReport connes_sequence(const MixedComplex& m) {
    LESReport rep;
    ValidationReport vr = validate(m);
    if (!vr.ok) {
        rep.valid_input = false;
        rep.validation_detail = vr.detail;
        rep.all_exact = false;
        return rep;
    }
    rep.validation_detail = vr.detail;
    if (m.space.empty()) return rep;  // zero complex: nothing to report, exact

    const int lo = m.space.lo(), hi = m.space.hi();
    rep.lo = lo;
    rep.hi = hi;
    rep.report_hi = hi + 2;

    ChainComplex col = column_complex(m);
    ChainComplex tot = totalize(m, lo - 1, hi + 3);

    std::map<int, HomologyData> H, HC;
    for (int n = lo - 1; n <= hi + 2; ++n) H[n] = homology(col, n);
    for (int n = lo - 2; n <= hi + 2; ++n) HC[n] = homology(tot, n);

    // induced maps per period n:
    //   I_n : H_n -> HC_n        (include as component 0 of Tot_n)
    //   S_n : HC_n -> HC_{n-2}   (drop component 0)
    //   conn_n : HC_{n-2} -> H_{n-1}  ([z] -> [B z_0])
    std::map<int, QMatrix> I, S, conn;
    for (int n = lo; n <= hi + 2; ++n) {
        I[n] = induced_map(H[n], HC[n], [&](const std::vector<Rat>& v) {
            std::vector<Rat> w(static_cast<size_t>(tot_dim(m, n)), Rat(0));
            std::copy(v.begin(), v.end(), w.begin());
            return w;
        });
        S[n] = induced_map(HC[n], HC[n - 2], [&](const std::vector<Rat>& v) {
            return std::vector<Rat>(v.begin() + m.space.dim(n), v.end());
        });
    }
    for (int n = lo; n <= hi + 3; ++n) {
        const int src = n - 2;  // group HC_{n-2}
        conn[n] = induced_map(HC[src], H[n - 1], [&](const std::vector<Rat>& v) {
            std::vector<Rat> z0(v.begin(), v.begin() + m.space.dim(src));
            return m.B_at(src).apply(z0);
        });
    }

    auto add_node = [&](std::string name, std::string kind, int degree, int dim,
                        std::string in_name, const QMatrix& in,
                        std::string out_name, const QMatrix& out) {
        LESNode node;
        node.name = std::move(name);
        node.kind = std::move(kind);
        node.degree = degree;
        node.dim = dim;
        node.in_map = std::move(in_name);
        node.out_map = std::move(out_name);
        node.in_rank = in.rank();
        node.out_rank = out.rank();
        node.composite_zero = (out * in).is_zero();
        node.exact = node.composite_zero && node.in_rank + node.out_rank == node.dim;
        node.verified = degree <= hi;  // honest margin at the reporting cap
        if (node.verified && !node.exact) rep.all_exact = false;
        rep.nodes.push_back(std::move(node));
    };

    auto nm = [](const char* base, int n) {
        std::ostringstream os;
        os << base << "_" << n;
        return os.str();
    };

    for (int n = hi + 2; n >= lo; --n) {
        add_node(nm("H", n), "H", n, H[n].dim, nm("conn", n + 1), conn[n + 1],
                 nm("I", n), I[n]);
        add_node(nm("HC", n), "HC", n, HC[n].dim, nm("I", n), I[n], nm("S", n), S[n]);
        add_node(nm("HC", n - 2), "HC", n - 2, HC[n - 2].dim, nm("S", n), S[n],
                 nm("conn", n), conn[n]);
    }
    add_node(nm("H", lo - 1), "H", lo - 1, H[lo - 1].dim, nm("conn", lo), conn[lo],
             nm("I", lo - 1), QMatrix(HC[lo - 1].dim, H[lo - 1].dim));
    return rep;
}

}  // namespace addchow
