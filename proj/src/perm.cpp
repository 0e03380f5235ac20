#include "addchow/perm.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace addchow {

Permutation::Permutation(int n) {
    if (n < 0) throw DomainError("negative permutation degree");
    img_.resize(static_cast<size_t>(n));
    std::iota(img_.begin(), img_.end(), 1);
}

Permutation Permutation::from_images(std::vector<int> images) {
    std::vector<char> seen(images.size(), 0);
    for (int v : images) {
        if (v < 1 || v > static_cast<int>(images.size()) || seen[static_cast<size_t>(v - 1)])
            throw DomainError("invalid permutation image list");
        seen[static_cast<size_t>(v - 1)] = 1;
    }
    Permutation p;
    p.img_ = std::move(images);
    return p;
}

int Permutation::operator()(int j) const {
    if (j < 1 || j > degree()) throw DomainError("permutation argument out of range");
    return img_[static_cast<size_t>(j - 1)];
}

Permutation Permutation::inverse() const {
    std::vector<int> inv(img_.size());
    for (size_t j = 0; j < img_.size(); ++j) inv[static_cast<size_t>(img_[j] - 1)] = static_cast<int>(j) + 1;
    Permutation p;
    p.img_ = std::move(inv);
    return p;
}

int Permutation::sign() const {
    int inversions = 0;
    for (size_t i = 0; i < img_.size(); ++i)
        for (size_t j = i + 1; j < img_.size(); ++j)
            if (img_[i] > img_[j]) ++inversions;
    return inversions % 2 == 0 ? 1 : -1;
}

Permutation operator*(const Permutation& a, const Permutation& b) {
    if (a.degree() != b.degree()) throw DomainError("composing permutations of unequal degree");
    std::vector<int> img(b.img_.size());
    for (size_t j = 0; j < img.size(); ++j) img[j] = a(b.img_[j]);
    return Permutation::from_images(std::move(img));
}

bool Permutation::operator<(const Permutation& o) const {
    if (degree() != o.degree()) return degree() < o.degree();
    return img_ < o.img_;
}

std::string Permutation::str() const {
    std::ostringstream os;
    os << "[";
    for (size_t j = 0; j < img_.size(); ++j) {
        if (j) os << " ";
        os << img_[j];
    }
    os << "]";
    return os.str();
}

int ShuffleSpec::total() const {
    int t = 0;
    for (int p : parts) {
        if (p < 0) throw DomainError("negative shuffle part");
        t += p;
    }
    return t;
}

std::vector<Permutation> enumerate_shuffles(const ShuffleSpec& spec) {
    int n = spec.total();
    // choose which block each value 1..n lands in, then place block images increasingly
    std::vector<int> labels;
    for (size_t k = 0; k < spec.parts.size(); ++k)
        labels.insert(labels.end(), static_cast<size_t>(spec.parts[k]), static_cast<int>(k));
    std::sort(labels.begin(), labels.end());
    std::vector<Permutation> out;
    do {
        // labels[v-1] = block receiving value v at its next free position
        std::vector<int> start(spec.parts.size(), 0);
        int acc = 0;
        for (size_t k = 0; k < spec.parts.size(); ++k) {
            start[k] = acc;
            acc += spec.parts[k];
        }
        std::vector<int> images(static_cast<size_t>(n));
        std::vector<int> next = start;
        for (int v = 1; v <= n; ++v) {
            int blk = labels[static_cast<size_t>(v - 1)];
            images[static_cast<size_t>(next[static_cast<size_t>(blk)]++)] = v;
        }
        out.push_back(Permutation::from_images(std::move(images)));
    } while (std::next_permutation(labels.begin(), labels.end()));
    return out;
}

bool is_shuffle(const Permutation& p, const ShuffleSpec& spec) {
    if (p.degree() != spec.total()) return false;
    int pos = 1;
    for (int part : spec.parts) {
        for (int j = 1; j < part; ++j)
            if (p(pos + j - 1) > p(pos + j)) return false;
        pos += part;
    }
    return true;
}

Permutation extend_right(const Permutation& tau, int s) {
    std::vector<int> img;
    for (int j = 1; j <= tau.degree(); ++j) img.push_back(tau(j));
    for (int j = 0; j < s; ++j) img.push_back(tau.degree() + 1 + j);
    return Permutation::from_images(std::move(img));
}

Permutation extend_left(int r, const Permutation& tau) {
    std::vector<int> img;
    for (int j = 1; j <= r; ++j) img.push_back(j);
    for (int j = 1; j <= tau.degree(); ++j) img.push_back(r + tau(j));
    return Permutation::from_images(std::move(img));
}

Permutation rotation(int r, int degree) {
    if (r + 1 > degree) throw DomainError("rotation width exceeds degree");
    std::vector<int> img(static_cast<size_t>(degree));
    img[0] = r + 1;
    for (int j = 2; j <= r + 1; ++j) img[static_cast<size_t>(j - 1)] = j - 1;
    for (int j = r + 2; j <= degree; ++j) img[static_cast<size_t>(j - 1)] = j;
    return Permutation::from_images(std::move(img));
}

Permutation sigma_insert(const Permutation& sigma, int i) {
    int n = sigma.degree();
    if (i < 1 || i > n + 1) throw DomainError("insertion slot out of range");
    // order isomorphism {1..n} -> {1..n+1} \ {i}
    auto up = [&](int v) { return v < i ? v : v + 1; };
    std::vector<int> img(static_cast<size_t>(n + 1));
    img[static_cast<size_t>(i - 1)] = i;
    for (int j = 1; j <= n; ++j) img[static_cast<size_t>(up(j) - 1)] = up(sigma(j));
    return Permutation::from_images(std::move(img));
}

Permutation phi_map(PhiKind kind, const Permutation& sigma, const Permutation& tau,
                    int r, int s) {
    auto require = [](bool ok, const char* what) {
        if (!ok) throw DomainError(std::string("phi_map: ") + what);
    };
    switch (kind) {
    case PhiKind::InsertThenShuffle:
        require(is_shuffle(sigma, {{r, s}}), "sigma must be an (r,s)-shuffle");
        require(is_shuffle(tau, {{1, r + s}}), "tau must be a (1,r+s)-shuffle");
        return sigma_insert(sigma, tau(1)) * tau;
    case PhiKind::ShuffleFirstBlock:
        require(is_shuffle(sigma, {{r + 1, s}}), "sigma must be an (r+1,s)-shuffle");
        require(is_shuffle(tau, {{1, r}}), "tau must be a (1,r)-shuffle");
        return sigma * extend_right(tau, s);
    case PhiKind::ShuffleLastBlock:
        require(is_shuffle(sigma, {{r, s + 1}}), "sigma must be an (r,s+1)-shuffle");
        require(is_shuffle(tau, {{1, s}}), "tau must be a (1,s)-shuffle");
        return sigma * extend_left(r, tau) * rotation(r, r + s + 1);
    }
    throw DomainError("phi_map: unknown kind");
}

GroupRingElem GroupRingElem::unit(const Permutation& p, long long coeff) {
    GroupRingElem e(p.degree());
    e.add(p, coeff);
    return e;
}

GroupRingElem& GroupRingElem::add(const Permutation& p, long long coeff) {
    if (p.degree() != degree_) throw DomainError("group ring degree mismatch");
    auto [it, inserted] = terms_.try_emplace(p, coeff);
    if (!inserted) {
        it->second += coeff;
        if (it->second == 0) terms_.erase(it);
    } else if (coeff == 0) {
        terms_.erase(it);
    }
    return *this;
}

GroupRingElem operator+(const GroupRingElem& a, const GroupRingElem& b) {
    if (a.degree_ != b.degree_) throw DomainError("group ring degree mismatch");
    GroupRingElem r = a;
    for (const auto& [p, c] : b.terms_) r.add(p, c);
    return r;
}

GroupRingElem operator-(const GroupRingElem& a, const GroupRingElem& b) {
    return a + b.scaled(-1);
}

GroupRingElem operator*(const GroupRingElem& a, const GroupRingElem& b) {
    if (a.degree_ != b.degree_) throw DomainError("group ring degree mismatch");
    GroupRingElem r(a.degree_);
    for (const auto& [p, c] : a.terms_)
        for (const auto& [q, d] : b.terms_) r.add(p * q, c * d);
    return r;
}

GroupRingElem GroupRingElem::scaled(long long c) const {
    GroupRingElem r(degree_);
    for (const auto& [p, v] : terms_) r.add(p, v * c);
    return r;
}

std::string GroupRingElem::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [p, c] : terms_) {
        if (first) {
            if (c < 0) os << "-";
            first = false;
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        long long a = c < 0 ? -c : c;
        if (a != 1) os << a << "*";
        os << p.str();
    }
    return os.str();
}

GroupRingElem signed_shuffle_sum(const ShuffleSpec& spec) {
    GroupRingElem e(spec.total());
    for (const auto& p : enumerate_shuffles(spec)) e.add(p, p.sign());
    return e;
}

ShuffleLemmaReport shuffle_lemma_check(int which, int r, int s) {
    if (r < 0 || s < 0) throw DomainError("shuffle lemma: negative block size");
    const int n = r + s;
    ShuffleLemmaReport rep{GroupRingElem(n + 1), signed_shuffle_sum({{1, r, s}}), false};
    switch (which) {
    case 1: {
        GroupRingElem lhs(n + 1);
        for (const auto& tau : enumerate_shuffles({{1, n}})) {
            GroupRingElem inner(n + 1);
            for (const auto& sigma : enumerate_shuffles({{r, s}}))
                inner.add(sigma_insert(sigma, tau(1)), sigma.sign());
            lhs = lhs + (inner * GroupRingElem::unit(tau)).scaled(tau.sign());
        }
        rep.lhs = lhs;
        break;
    }
    case 2: {
        GroupRingElem left(n + 1), right(n + 1);
        for (const auto& sigma : enumerate_shuffles({{r + 1, s}})) left.add(sigma, sigma.sign());
        for (const auto& tau : enumerate_shuffles({{1, r}}))
            right.add(extend_right(tau, s), tau.sign());
        rep.lhs = left * right;
        break;
    }
    case 3: {
        GroupRingElem left(n + 1), right(n + 1);
        for (const auto& sigma : enumerate_shuffles({{r, s + 1}})) left.add(sigma, sigma.sign());
        Permutation rot = rotation(r, n + 1);
        for (const auto& tau : enumerate_shuffles({{1, s}}))
            right.add(extend_left(r, tau) * rot, tau.sign());
        rep.lhs = (left * right).scaled(r % 2 == 0 ? 1 : -1);
        break;
    }
    default:
        throw DomainError("shuffle lemma index must be 1, 2, or 3");
    }
    rep.equal = rep.lhs == rep.rhs;
    return rep;
}

} // namespace addchow
