#pragma once

// Randomized Grassmann/Berezin axiom checks shared by the unit tests and the
// acceptance runner.  Everything runs over a modular ring so equality is
// cheap and exact; the axioms themselves are ring-agnostic.

#include <random>
#include <string>
#include <vector>

#include "berezin/grassmann.hpp"
#include "berezin/rings.hpp"

namespace berezin::testsupport {

struct AxiomStats {
    int cases = 0;
    int failures = 0;
    std::vector<std::string> notes;

    void check(bool ok, const std::string& what) {
        ++cases;
        if (!ok) {
            ++failures;
            if (notes.size() < 10) notes.push_back(what);
        }
    }
};

// parity: -1 any, 0 even terms only, 1 odd terms only
inline Element<Fp> random_element(const ModularRing& ring, std::mt19937_64& rng, int terms, int parity = -1) {
    Element<Fp> e;
    const Mask all = (Mask{1} << kNumGenerators) - 1;
    for (int t = 0; t < terms; ++t) {
        Mask m = static_cast<Mask>(rng()) & all;
        if (parity >= 0 && static_cast<int>(mask_degree(m) % 2) != parity) {
            int flip = static_cast<int>(rng() % kNumGenerators);
            m ^= mask_bit(flip);
        }
        e.add_term(m, Fp{rng() % ring.prime(), ring.prime()});
    }
    return e;
}

inline Mask random_monomial(std::mt19937_64& rng) { return static_cast<Mask>(rng()) & ((Mask{1} << kNumGenerators) - 1); }

// Independent recomputation of the one-generator integral sign: count the
// generators of the monomial sitting above g, without using reorder_sign.
inline int naive_berezin_sign(Mask m, int g) {
    int above = 0;
    for (int i = g + 1; i < kNumGenerators; ++i)
        if (m & mask_bit(i)) ++above;
    return above % 2 ? -1 : 1;
}

inline AxiomStats run_axiom_cases(std::uint64_t seed, int iterations) {
    AxiomStats st;
    std::mt19937_64 rng(seed);
    ModularRing ring = ModularRing::sample(kDefaultPrime, rng);
    const Fp one = ring.one();

    // fixed-point checks first: the definitional integrals
    {
        Element<Fp> unit = Element<Fp>::from_scalar(one);
        st.check(berezin(unit, 0).is_zero(), "integral of 1 should vanish");
        st.check(berezin(Element<Fp>::generator(0, one), 0) == unit, "integral of a single generator should be 1");
        Element<Fp> ab = Element<Fp>::generator(0, one) * Element<Fp>::generator(1, one);
        st.check(berezin_multi(ab, {1, 0}) == unit, "iterated integral, inner generator last in the product");
        st.check(berezin_multi(ab, {0, 1}) == -unit, "iterated integral in the opposite order");
    }

    for (int it = 0; it < iterations; ++it) {
        Element<Fp> x = random_element(ring, rng, 4);
        Element<Fp> y = random_element(ring, rng, 4);
        Element<Fp> z = random_element(ring, rng, 4);
        st.check((x * y) * z == x * (y * z), "associativity");
        st.check(x * (y + z) == x * y + x * z, "distributivity");

        Mask m1 = random_monomial(rng), m2 = random_monomial(rng);
        Element<Fp> e1, e2;
        e1.add_term(m1, one);
        e2.add_term(m2, one);
        bool anti = (mask_degree(m1) % 2) && (mask_degree(m2) % 2);
        st.check(e1 * e2 == (anti ? -(e2 * e1) : e2 * e1), "graded commutativity of monomials");

        int g = static_cast<int>(rng() % kNumGenerators);
        Element<Fp> gen = Element<Fp>::generator(g, one);
        st.check((gen * gen).is_zero(), "generator squares to zero");
        Element<Fp> odd = random_element(ring, rng, 4, 1);
        st.check((odd * odd).is_zero(), "odd elements square to zero");

        Fp alpha{rng() % ring.prime(), ring.prime()}, beta{rng() % ring.prime(), ring.prime()};
        st.check(berezin(x.scaled(alpha) + y.scaled(beta), g) ==
                     berezin(x, g).scaled(alpha) + berezin(y, g).scaled(beta),
                 "linearity of the integral");

        Element<Fp> gfree;
        for (const auto& [m, c] : x.terms()) gfree.add_term(m & ~mask_bit(g), c);
        st.check(berezin(gfree, g).is_zero(), "integral kills generator-free input");
        st.check(berezin(berezin(x, g), g).is_zero(), "iterated integral in one generator vanishes");

        Mask mg = random_monomial(rng) | mask_bit(g);
        Element<Fp> probe;
        probe.add_term(mg, one);
        Element<Fp> expect;
        expect.add_term(mg & ~mask_bit(g), naive_berezin_sign(mg, g) < 0 ? -one : one);
        st.check(berezin(probe, g) == expect, "integral sign against the naive count");

        int g2 = static_cast<int>(rng() % kNumGenerators);
        if (g2 != g)
            st.check(berezin_multi(x, {g, g2}) == -berezin_multi(x, {g2, g}), "iterated integrals anticommute");

        Element<Fp> a = random_element(ring, rng, 3, 0);
        Element<Fp> b = random_element(ring, rng, 3, 0);
        Element<Fp> a0 = a - Element<Fp>::from_scalar(coefficient_of(ring, a, 0));
        Element<Fp> b0 = b - Element<Fp>::from_scalar(coefficient_of(ring, b, 0));
        st.check(exp(ring, a0 + b0) == exp(ring, a0) * exp(ring, b0), "exponential of a sum of even elements");
        st.check(exp(ring, a0) * exp(ring, -a0) == Element<Fp>::from_scalar(one), "exponential inverse");
    }
    return st;
}

}  // namespace berezin::testsupport
