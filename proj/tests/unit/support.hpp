#pragma once

#include "efb/algebra.hpp"
#include "efb/random.hpp"

namespace efb::test {

inline AlgebraElement random_element(Rng& rng, int m, std::size_t terms, Field f = Field::Q, long height = 20) {
    std::vector<AlgebraElement::Term> t;
    const std::uint64_t n = std::uint64_t{1} << (2 * m);
    for (std::size_t i = 0; i < terms; ++i)
        t.emplace_back(static_cast<std::uint32_t>(rng.below(n)), rng.scalar(f, height));
    return AlgebraElement::from_terms(m, f, std::move(t));
}

inline AlgebraElement monomial(int m, Mask a, Mask b) { return AlgebraElement::monomial(m, {a, b}); }

}  // namespace efb::test
