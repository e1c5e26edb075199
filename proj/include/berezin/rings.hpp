#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <random>
#include <span>
#include <stdexcept>

#include "berezin/primefield.hpp"
#include "berezin/scalar.hpp"

namespace berezin {

// A coefficient ring bundles construction of the basic scalars (coordinate
// differences, the deformation parameters, integers) with the few division
// operations the engine needs.  The whole algebra stack is templated on it;
// the two concrete rings below share the interface.

class SymbolicRing {
  public:
    using Scalar = berezin::Scalar;

    SymbolicRing() = default;
    // Numeric mode: the five coordinates are fixed rationals.  Coincident
    // values are representable; operations that would divide by a vanishing
    // difference throw at the point of use.
    explicit SymbolicRing(const std::array<Rational, 5>& zeta) : zeta_(zeta) {}

    bool numeric() const { return zeta_.has_value(); }
    const std::optional<std::array<Rational, 5>>& coordinates() const { return zeta_; }

    void require_distinct_coordinates() const {
        if (!zeta_) return;
        for (int i = 0; i < 5; ++i)
            for (int j = i + 1; j < 5; ++j)
                if ((*zeta_)[static_cast<std::size_t>(i)] == (*zeta_)[static_cast<std::size_t>(j)])
                    throw std::domain_error("coincident coordinates z" + std::to_string(i + 1) + " = z" +
                                            std::to_string(j + 1) + " in numeric mode");
    }

    Scalar zero() const { return Scalar{}; }
    Scalar one() const { return Scalar::from_rational(1); }
    Scalar integer(long long n) const { return Scalar::from_rational(Rational(static_cast<long>(n))); }
    Scalar rational(const Rational& q) const { return Scalar::from_rational(q); }

    Scalar zeta_diff(int i, int j) const {
        if (i < 1 || i > 5 || j < 1 || j > 5) throw std::invalid_argument("vertex label outside 1..5");
        if (zeta_) {
            return Scalar::from_rational((*zeta_)[static_cast<std::size_t>(i - 1)] -
                                         (*zeta_)[static_cast<std::size_t>(j - 1)]);
        }
        return Scalar(MultiPoly::zeta_difference(i, j));
    }
    Scalar lambda_param() const { return Scalar(MultiPoly::variable(kLambdaVar)); }
    Scalar mu_param() const { return Scalar(MultiPoly::variable(kMuVar)); }

    Scalar divide(const Scalar& a, const Scalar& by) const { return a.divide(by); }

    // Exact division for fraction-free elimination.  The eliminations feed
    // denominator-cleared entries, so inexactness means a broken invariant.
    Scalar exact_div(const Scalar& a, const Scalar& by) const {
        MultiPoly n = a.numerator() * by.denominator().as_poly();
        auto q = n.exact_div(by.numerator());
        if (!q) throw std::logic_error("inexact division in fraction-free elimination");
        return Scalar(std::move(*q), a.denominator());
    }

    // Multiplies away every denominator in the row; returns the factor used.
    Scalar clear_row_denominators(std::span<Scalar> row) const {
        ZetaFactors lcm;
        for (const Scalar& x : row) lcm = lcm.max_with(x.denominator());
        if (lcm.empty()) return one();
        Scalar factor(lcm.as_poly());
        for (Scalar& x : row) x = x * factor;
        return factor;
    }

  private:
    std::optional<std::array<Rational, 5>> zeta_;
};

class ModularRing {
  public:
    using Scalar = Fp;

    ModularRing(std::uint64_t p, const std::array<std::uint64_t, 5>& zeta, std::uint64_t lambda, std::uint64_t mu)
        : p_(p), lambda_(lambda % p), mu_(mu % p) {
        if (!is_prime_u64(p) || p < 11 || p % 2 == 0)
            throw std::invalid_argument("modulus must be an odd prime >= 11");
        for (int i = 0; i < 5; ++i) zeta_[static_cast<std::size_t>(i)] = zeta[static_cast<std::size_t>(i)] % p;
        for (int i = 0; i < 5; ++i)
            for (int j = i + 1; j < 5; ++j)
                if (zeta_[static_cast<std::size_t>(i)] == zeta_[static_cast<std::size_t>(j)])
                    throw std::domain_error("coincident coordinates mod p");
    }

    // Draws coordinates (distinct mod p) and parameters; fixed values, when
    // given, override the sampling.
    static ModularRing sample(std::uint64_t p, std::mt19937_64& rng,
                              const std::optional<std::array<std::uint64_t, 5>>& fixed_zeta = std::nullopt,
                              std::optional<std::uint64_t> lambda = std::nullopt,
                              std::optional<std::uint64_t> mu = std::nullopt) {
        std::array<std::uint64_t, 5> z{};
        if (fixed_zeta) {
            z = *fixed_zeta;
        } else {
            for (int i = 0; i < 5; ++i) {
                bool fresh = false;
                while (!fresh) {
                    z[static_cast<std::size_t>(i)] = rng() % p;
                    fresh = true;
                    for (int j = 0; j < i; ++j)
                        if (z[static_cast<std::size_t>(j)] == z[static_cast<std::size_t>(i)]) fresh = false;
                }
            }
        }
        std::uint64_t l = lambda ? *lambda % p : rng() % p;
        std::uint64_t m = mu ? *mu % p : rng() % p;
        return ModularRing(p, z, l, m);
    }

    std::uint64_t prime() const { return p_; }
    const std::array<std::uint64_t, 5>& coordinates() const { return zeta_; }
    std::uint64_t lambda_value() const { return lambda_; }
    std::uint64_t mu_value() const { return mu_; }

    Scalar zero() const { return Fp{0, p_}; }
    Scalar one() const { return Fp{1, p_}; }
    Scalar integer(long long n) const { return fp_from_int(n, p_); }

    Scalar zeta_diff(int i, int j) const {
        if (i < 1 || i > 5 || j < 1 || j > 5) throw std::invalid_argument("vertex label outside 1..5");
        return Fp{zeta_[static_cast<std::size_t>(i - 1)], p_} - Fp{zeta_[static_cast<std::size_t>(j - 1)], p_};
    }
    Scalar lambda_param() const { return Fp{lambda_, p_}; }
    Scalar mu_param() const { return Fp{mu_, p_}; }

    Scalar divide(const Scalar& a, const Scalar& by) const { return a.divide(by); }
    Scalar exact_div(const Scalar& a, const Scalar& by) const { return a.divide(by); }
    Scalar clear_row_denominators(std::span<Scalar> /*row*/) const { return one(); }

    void require_distinct_coordinates() const {}  // enforced at construction

  private:
    std::uint64_t p_;
    std::array<std::uint64_t, 5> zeta_{};
    std::uint64_t lambda_, mu_;
};

inline Fp fp_from_rational(const Rational& q, std::uint64_t p) {
    std::uint64_t num = mpz_fdiv_ui(q.get_num().get_mpz_t(), p);
    std::uint64_t den = mpz_fdiv_ui(q.get_den().get_mpz_t(), p);
    if (den == 0) throw std::domain_error("rational denominator vanishes mod p");
    return Fp{num, p}.divide(Fp{den, p});
}

// Evaluation homomorphism into the modular ring's point.
inline Fp eval_modp(const MultiPoly& poly, const ModularRing& ring) {
    std::uint64_t p = ring.prime();
    std::array<std::uint64_t, kNumVars> point{};
    for (int i = 0; i < 5; ++i) point[static_cast<std::size_t>(i)] = ring.coordinates()[static_cast<std::size_t>(i)];
    point[kLambdaVar] = ring.lambda_value();
    point[kMuVar] = ring.mu_value();
    Fp acc{0, p};
    for (const auto& [ex, c] : poly.terms()) {
        Fp t = fp_from_rational(c, p);
        for (int v = 0; v < kNumVars; ++v)
            for (int k = 0; k < ex.e[static_cast<std::size_t>(v)]; ++k)
                t = t * Fp{point[static_cast<std::size_t>(v)], p};
        acc = acc + t;
    }
    return acc;
}

inline Fp eval_modp(const Scalar& x, const ModularRing& ring) {
    Fp num = eval_modp(x.numerator(), ring);
    Fp den{1, ring.prime()};
    for (int s = 0; s < ZetaFactors::kPairs; ++s) {
        auto [i, j] = ZetaFactors::slot_pair(s);
        for (int k = 0; k < x.denominator().count(s); ++k) den = den * ring.zeta_diff(i, j);
    }
    if (den.is_zero()) throw std::domain_error("denominator vanishes at the evaluation point");
    return num.divide(den);
}

}  // namespace berezin
