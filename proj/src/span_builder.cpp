#include "addchow/span_builder.hpp"

#include <deque>
#include <utility>

#include "addchow/error.hpp"

namespace addchow {

namespace {

FormalCycle singleton(const SlotSpace& sp, const CycleTerm& t) {
    FormalCycle z(sp);
    z.add(CycleTerm(t), 1);
    return z;
}

}  // namespace

MixedComplex span_builder(const std::vector<FormalCycle>& seeds, const SpanOptions& opt) {
    MixedComplex mc;
    if (seeds.empty()) return mc;
    const ModulusRing ring = seeds[0].space().ring;
    if (ring.e != 1)
        throw DomainError("span_builder needs embedding dimension 1");
    for (const auto& s : seeds) {
        if (s.space().ring.e != ring.e || s.space().ring.m != ring.m)
            throw DomainError("span_builder seeds must share one modulus ring");
        if (s.space().n > opt.n_cap)
            throw SizeLimitError("cap exceeded: seed has more slots than n_cap");
        if (opt.require_reduced && !is_reduced(s))
            throw DomainError("non-reduced seed: " + s.str());
    }

    std::map<int, std::map<CycleTerm, int, TermLess>> basis;
    std::deque<std::pair<int, CycleTerm>> work;
    auto discover = [&](int n, const CycleTerm& t) {
        if (basis[n].emplace(t, 0).second) work.emplace_back(n, t);
    };
    for (const auto& s : seeds)
        for (const auto& [t, data] : s.terms()) discover(s.space().n, t);

    while (!work.empty()) {
        auto [n, t] = work.front();
        work.pop_front();
        FormalCycle z = singleton(SlotSpace{ring, n}, t);
        FormalCycle down = boundary(z, BoundaryMode::LastZero);
        for (const auto& [u, data] : down.terms()) discover(n - 1, u);
        FormalCycle up = delta(z);
        if (n + 1 > opt.n_cap) {
            if (!up.is_zero())
                throw SizeLimitError("cap exceeded: nonzero insertion image above n_cap");
        } else {
            for (const auto& [u, data] : up.terms()) discover(n + 1, u);
        }
    }

    for (auto& [n, level] : basis) {
        if (level.empty()) continue;
        int idx = 0;
        std::vector<std::string> lab;
        for (auto& [t, i] : level) {
            i = idx++;
            lab.push_back(term_str(t));
        }
        mc.space.dims[n] = idx;
        mc.space.labels[n] = std::move(lab);
    }

    auto coords = [&](int n, const FormalCycle& z) {
        auto it_level = basis.find(n);
        const size_t size =
            it_level == basis.end() ? 0 : it_level->second.size();
        std::vector<Rat> v(size, Rat(0));
        for (const auto& [t, data] : z.terms()) {
            if (it_level == basis.end())
                throw Error("span closure missed a level");
            auto it = it_level->second.find(t);
            if (it == it_level->second.end())
                throw Error("span closure missed a term");
            v[static_cast<size_t>(it->second)] = Rat(data.coeff);
        }
        return v;
    };

    for (const auto& [n, level] : basis) {
        if (level.empty()) continue;
        QMatrix bmat(mc.space.dim(n - 1), mc.space.dim(n));
        QMatrix Bmat(mc.space.dim(n + 1), mc.space.dim(n));
        for (const auto& [t, j] : level) {
            FormalCycle z = singleton(SlotSpace{ring, n}, t);
            std::vector<Rat> down = coords(n - 1, boundary(z, BoundaryMode::LastZero));
            for (size_t i = 0; i < down.size(); ++i)
                bmat.at(static_cast<int>(i), j) = down[i];
            if (n + 1 <= opt.n_cap) {
                FormalCycle up = delta(z).scaled(n % 2 == 0 ? 1 : -1);
                std::vector<Rat> upv = coords(n + 1, up);
                for (size_t i = 0; i < upv.size(); ++i)
                    Bmat.at(static_cast<int>(i), j) = upv[i];
            }
        }
        mc.b[n] = std::move(bmat);
        mc.B[n] = std::move(Bmat);
    }
    return mc;
}

MixedComplex span_builder(const std::vector<FormalCycle>& seeds, int n_cap) {
    SpanOptions opt;
    opt.n_cap = n_cap;
    return span_builder(seeds, opt);
}

}  // namespace addchow
