#include "ldef/lie/scheme.hpp"

namespace ldef {

std::map<size_t, Poly> jacobi_polynomials(size_t m, const std::map<size_t, Poly>& values) {
    CochainSpace s2(m, 2, m), s3(m, 3, m);
    std::vector<std::vector<std::pair<size_t, const Poly*>>> table(s2.ntuples());
    for (auto& [idx, p] : values) {
        if (p.is_zero()) continue;
        table[idx / m].emplace_back(idx % m, &p);
    }
    auto bracket = [&](size_t a, size_t b) -> std::pair<int, const std::vector<std::pair<size_t, const Poly*>>*> {
        if (a == b) return {0, nullptr};
        Tuple t = a < b ? Tuple{a, b} : Tuple{b, a};
        return {a < b ? 1 : -1, &table[s2.tuple_rank(t)]};
    };
    std::map<size_t, Poly> out;
    for (size_t r = 0; r < s3.ntuples(); ++r) {
        Tuple t = s3.tuple(r);
        std::map<size_t, Poly> acc;
        const size_t cyc[3][3] = {{t[0], t[1], t[2]}, {t[1], t[2], t[0]}, {t[2], t[0], t[1]}};
        for (auto& c : cyc) {
            auto [s1, inner] = bracket(c[0], c[1]);
            if (!inner) continue;
            for (auto& [sidx, p] : *inner) {
                auto [s2sign, outer] = bracket(sidx, c[2]);
                if (!outer) continue;
                for (auto& [l, q] : *outer) {
                    Poly prod = (*p) * (*q);
                    if (s1 * s2sign < 0) prod = -prod;
                    auto it = acc.find(l);
                    if (it == acc.end())
                        acc.emplace(l, std::move(prod));
                    else
                        it->second += prod;
                }
            }
        }
        for (auto& [l, p] : acc)
            if (!p.is_zero()) out.emplace(s3.index_of_rank(r, l), std::move(p));
    }
    return out;
}

}  // namespace ldef
