#include "cuspcensus/groebner.hpp"

namespace cuspcensus {

std::vector<PolyT<FpElt>> to_fp(const std::vector<Poly>& gens, uint64_t prime) {
    std::vector<PolyT<FpElt>> out;
    out.reserve(gens.size());
    for (const auto& g : gens) {
        PolyT<FpElt> p(g.vars());
        for (const auto& [m, c] : g.terms()) p.add_term(m, FpElt::from_rat(c, prime));
        if (!g.is_zero() && p.is_zero())
            throw std::domain_error("polynomial collapses to zero mod p");
        out.push_back(std::move(p));
    }
    return out;
}

}  // namespace cuspcensus
