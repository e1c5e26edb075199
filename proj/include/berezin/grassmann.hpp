#pragma once

#include <map>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

#include "berezin/generators.hpp"

namespace berezin {

// Parity of the number of crossings when the generators of b are moved into
// a (both stored as ascending bit masks): for each bit of b, count the bits
// of a above it.  Returns +1 or -1; the masks must be disjoint.
inline int reorder_sign(Mask a, Mask b) {
    int crossings = 0;
    for (int g = 0; g < kNumGenerators; ++g)
        if (b & mask_bit(g)) crossings += __builtin_popcount(a >> (g + 1));
    return (crossings & 1) ? -1 : 1;
}

// Element of the Grassmann algebra over the 20 generators, with coefficients
// in K (exact localized scalars or prime-field residues).  Stored as an
// ordered monomial->coefficient map; zero coefficients are never kept.
template <class K>
class Element {
  public:
    using Terms = std::map<Mask, K>;

    Element() = default;

    static Element from_scalar(const K& c) {
        Element e;
        e.add_term(Mask{0}, c);
        return e;
    }
    static Element generator(int g, const K& coeff) {
        Element e;
        e.add_term(mask_bit(g), coeff);
        return e;
    }

    void add_term(Mask m, const K& c) {
        if (c.is_zero()) return;
        auto it = terms_.find(m);
        if (it == terms_.end()) {
            terms_.emplace(m, c);
        } else {
            it->second = it->second + c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }
    const Terms& terms() const { return terms_; }

    Element& operator+=(const Element& o) {
        for (const auto& [m, c] : o.terms_) add_term(m, c);
        return *this;
    }
    friend Element operator+(Element a, const Element& b) { return a += b; }
    Element operator-() const {
        Element r;
        for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
        return r;
    }
    friend Element operator-(const Element& a, const Element& b) { return a + (-b); }

    friend Element operator*(const Element& a, const Element& b) {
        Element r;
        for (const auto& [ma, ca] : a.terms_)
            for (const auto& [mb, cb] : b.terms_) {
                if (ma & mb) continue;  // repeated generator squares to zero
                K c = ca * cb;
                if (reorder_sign(ma, mb) < 0) c = -c;
                r.add_term(ma | mb, c);
            }
        return r;
    }
    Element scaled(const K& c) const {
        Element r;
        for (const auto& [m, k] : terms_) r.add_term(m, k * c);
        return r;
    }

    friend bool operator==(const Element& a, const Element& b) { return (a - b).is_zero(); }
    friend bool operator!=(const Element& a, const Element& b) { return !(a == b); }

    bool is_even() const {
        for (const auto& [m, c] : terms_)
            if (mask_degree(m) % 2) return false;
        return true;
    }
    bool is_odd() const {
        for (const auto& [m, c] : terms_)
            if (mask_degree(m) % 2 == 0) return false;
        return true;
    }
    bool has_scalar_part() const { return terms_.count(Mask{0}) > 0; }
    int max_degree() const {
        int d = 0;
        for (const auto& [m, c] : terms_) d = std::max(d, mask_degree(m));
        return d;
    }

    std::map<int, Element> degree_split() const {
        std::map<int, Element> out;
        for (const auto& [m, c] : terms_) out[mask_degree(m)].add_term(m, c);
        return out;
    }
    std::map<int, std::size_t> degree_histogram() const {
        std::map<int, std::size_t> out;
        for (const auto& [m, c] : terms_) ++out[mask_degree(m)];
        return out;
    }

  private:
    Terms terms_;
};

// Integral over one generator: terms free of g die; in a surviving term g
// moves right past the generators above it, each crossing flipping the sign,
// and is then consumed.
template <class K>
Element<K> berezin(const Element<K>& x, int g) {
    Element<K> r;
    Mask bit = mask_bit(g);
    for (const auto& [m, c] : x.terms()) {
        if (!(m & bit)) continue;
        int above = __builtin_popcount(m >> (g + 1));
        r.add_term(m & ~bit, (above & 1) ? -c : c);
    }
    return r;
}

// Iterated integral; the first generator in the list is the innermost one.
template <class K>
Element<K> berezin_multi(const Element<K>& x, std::span<const int> gens) {
    Element<K> r = x;
    for (int g : gens) r = berezin(r, g);
    return r;
}

template <class K>
Element<K> berezin_multi(const Element<K>& x, std::initializer_list<int> gens) {
    return berezin_multi(x, std::span<const int>(gens.begin(), gens.size()));
}

// Nilpotent exponential sum(x^n / n!).  Requires an even argument with no
// scalar part, so the series terminates on its own (x^n = 0 once 2n exceeds
// the number of generators).
template <class R>
Element<typename R::Scalar> exp(const R& ring, const Element<typename R::Scalar>& x) {
    if (!x.is_even()) throw std::domain_error("exp needs an even element");
    if (x.has_scalar_part()) throw std::domain_error("exp needs a zero scalar part");
    Element<typename R::Scalar> result = Element<typename R::Scalar>::from_scalar(ring.one());
    Element<typename R::Scalar> power = result;
    long long factorial = 1;
    for (int n = 1; n <= kNumGenerators / 2 + 1; ++n) {
        power = power * x;
        if (power.is_zero()) break;
        factorial *= n;
        result += power.scaled(ring.divide(ring.one(), ring.integer(factorial)));
    }
    return result;
}

template <class R>
typename R::Scalar coefficient_of(const R& ring, const Element<typename R::Scalar>& x, Mask m) {
    auto it = x.terms().find(m);
    return it == x.terms().end() ? ring.zero() : it->second;
}

}  // namespace berezin
