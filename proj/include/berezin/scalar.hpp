#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <utility>

#include "berezin/multipoly.hpp"

namespace berezin {

// Multiset of coordinate differences z_i - z_j (i < j, labels in 1..5).
// These are the only polynomials the engine ever divides by wholesale, so a
// denominator is just a bag of the ten possible pairs.
class ZetaFactors {
  public:
    static constexpr int kPairs = 10;

    static int pair_slot(int i, int j) {
        if (i > j) std::swap(i, j);
        if (i < 1 || j > 5 || i == j) throw std::invalid_argument("bad coordinate pair");
        // (1,2)..(1,5),(2,3)..(2,5),(3,4),(3,5),(4,5)
        static constexpr int base[5] = {0, 4, 7, 9, 10};
        return base[i - 1] + (j - i - 1);
    }
    static std::pair<int, int> slot_pair(int s) {
        for (int i = 1; i <= 4; ++i)
            for (int j = i + 1; j <= 5; ++j)
                if (pair_slot(i, j) == s) return {i, j};
        throw std::invalid_argument("bad slot");
    }

    int count(int s) const { return count_[static_cast<std::size_t>(s)]; }
    void add(int i, int j, int n = 1) { count_[static_cast<std::size_t>(pair_slot(i, j))] += static_cast<std::uint8_t>(n); }
    void remove_slot(int s) {
        if (count_[static_cast<std::size_t>(s)] == 0) throw std::logic_error("removing absent factor");
        --count_[static_cast<std::size_t>(s)];
    }
    bool empty() const {
        for (auto c : count_) if (c) return false;
        return true;
    }
    int total() const {
        int t = 0;
        for (auto c : count_) t += c;
        return t;
    }
    void clear() { count_.fill(0); }

    ZetaFactors merged(const ZetaFactors& o) const {  // multiset sum
        ZetaFactors r = *this;
        for (int s = 0; s < kPairs; ++s) r.count_[static_cast<std::size_t>(s)] = static_cast<std::uint8_t>(r.count(s) + o.count(s));
        return r;
    }
    ZetaFactors max_with(const ZetaFactors& o) const {  // multiset lcm
        ZetaFactors r;
        for (int s = 0; s < kPairs; ++s) r.count_[static_cast<std::size_t>(s)] = static_cast<std::uint8_t>(std::max(count(s), o.count(s)));
        return r;
    }
    ZetaFactors minus(const ZetaFactors& o) const {  // requires o <= *this slotwise
        ZetaFactors r;
        for (int s = 0; s < kPairs; ++s) {
            if (o.count(s) > count(s)) throw std::logic_error("multiset underflow");
            r.count_[static_cast<std::size_t>(s)] = static_cast<std::uint8_t>(count(s) - o.count(s));
        }
        return r;
    }

    MultiPoly as_poly() const {
        MultiPoly p = MultiPoly::constant(1);
        for (int s = 0; s < kPairs; ++s) {
            auto [i, j] = slot_pair(s);
            for (int k = 0; k < count(s); ++k) p *= MultiPoly::zeta_difference(i, j);
        }
        return p;
    }

    bool operator==(const ZetaFactors& o) const { return count_ == o.count_; }

  private:
    std::array<std::uint8_t, kPairs> count_{};
};

// Element of the localization of QQ[z1..z5, lam, mu] at the coordinate
// differences: numerator polynomial over a denominator multiset of z_i - z_j
// factors.  Kept normalized (no z_i - z_j dividing the numerator while also
// present in the denominator), which makes the representation canonical.
class Scalar {
  public:
    Scalar() = default;
    explicit Scalar(MultiPoly num) : num_(std::move(num)) {}
    Scalar(MultiPoly num, ZetaFactors den) : num_(std::move(num)), den_(den) { normalize(); }

    static Scalar from_rational(const Rational& q) { return Scalar(MultiPoly::constant(q)); }

    bool is_zero() const { return num_.is_zero(); }
    const MultiPoly& numerator() const { return num_; }
    const ZetaFactors& denominator() const { return den_; }

    friend Scalar operator+(const Scalar& a, const Scalar& b) {
        ZetaFactors common = a.den_.max_with(b.den_);
        MultiPoly n = a.num_ * common.minus(a.den_).as_poly() + b.num_ * common.minus(b.den_).as_poly();
        return Scalar(std::move(n), common);
    }
    friend Scalar operator-(const Scalar& a, const Scalar& b) { return a + (-b); }
    Scalar operator-() const {
        Scalar r;
        r.num_ = -num_;
        r.den_ = den_;
        return r;
    }
    friend Scalar operator*(const Scalar& a, const Scalar& b) {
        return Scalar(a.num_ * b.num_, a.den_.merged(b.den_));
    }
    Scalar scaled(const Rational& q) const {
        if (q == 0) return Scalar{};
        Scalar r;
        r.num_ = num_.scaled(q);
        r.den_ = den_;
        return r;
    }

    // Equality by cross-multiplication, so it never depends on normalization.
    friend bool operator==(const Scalar& a, const Scalar& b) {
        return a.num_ * b.den_.as_poly() == b.num_ * a.den_.as_poly();
    }
    friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

    // A unit of the localized ring: nonzero rational times a product of
    // coordinate differences.  Returns its factorization, or nullopt.
    struct UnitFactors {
        Rational c;
        ZetaFactors zetas;
    };
    std::optional<UnitFactors> as_unit() const {
        if (num_.is_zero()) return std::nullopt;
        MultiPoly n = num_;
        ZetaFactors f;
        bool progress = true;
        while (!n.is_constant() && progress) {
            progress = false;
            for (int s = 0; s < ZetaFactors::kPairs && !progress; ++s) {
                auto [i, j] = ZetaFactors::slot_pair(s);
                if (auto q = exact_div_linear(n, i, j)) {
                    n = std::move(*q);
                    f.add(i, j);
                    progress = true;
                }
            }
        }
        if (!n.is_constant()) return std::nullopt;
        return UnitFactors{n.constant_value(), f};
    }

    // Division restricted to units (the only division the verifier needs).
    Scalar divide(const Scalar& by) const {
        if (by.is_zero()) throw std::domain_error("scalar division by zero");
        auto u = by.as_unit();
        if (!u) throw std::domain_error("scalar division by a non-unit");
        MultiPoly n = num_ * by.den_.as_poly();
        n = n.scaled(Rational(1) / u->c);
        return Scalar(std::move(n), den_.merged(u->zetas));
    }

  private:
    void normalize() {
        if (num_.is_zero()) {
            den_.clear();
            return;
        }
        for (int s = 0; s < ZetaFactors::kPairs; ++s) {
            auto [i, j] = ZetaFactors::slot_pair(s);
            while (den_.count(s) > 0) {
                auto q = exact_div_linear(num_, i, j);
                if (!q) break;
                num_ = std::move(*q);
                den_.remove_slot(s);
            }
        }
    }

    MultiPoly num_;
    ZetaFactors den_;
};

}  // namespace berezin
