#include "addchow/totaro.hpp"

#include "addchow/error.hpp"

namespace addchow {

FormalCycle totaro_c2(const RatFunc& a, const RatFunc& b1, const RatFunc& b2,
                      const std::vector<ProjValue>& extra, int modulus) {
    if (b1.is_zero() || b2.is_zero())
        throw DomainError("totaro_c2: parameters b1, b2 must be nonzero");
    SlotSpace sp{ModulusRing::monomial(modulus), 2 + static_cast<int>(extra.size())};
    FormalCycle out(sp);
    if (a.is_zero()) return out;
    const char* param = "_s";
    RatFunc s = RatFunc::var(param);
    RatFunc denom = s - b1 * b2;
    CurveTerm c;
    c.a = {a.inverse()};
    c.box.emplace_back(Mobius::identity());
    c.box.emplace_back(Mobius::from_ratfunc((b1 * s - b1 * b2) / denom, param));
    for (const auto& v : extra) c.box.emplace_back(v);
    out.add(std::move(c), 1);
    return out;
}

} // namespace addchow
