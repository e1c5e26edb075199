#pragma once

#include <stdexcept>

#include "berezin/grassmann.hpp"

namespace berezin {

// Orientation sign of a tetrahedron inside the pentagon configuration.  The
// five sorted 4-subsets carry fixed base signs; a permuted vertex order
// multiplies by the permutation sign, so the sign flips whenever the
// orientation does.
inline int orientation_sign(const Tetra& t) {
    static constexpr int base[kNumTets] = {+1, -1, -1, +1, -1};  // 1234,1235,1245,1345,2345
    return base[tet_index(t.sorted())] * t.parity_to_sorted();
}

// Product of the six coordinate differences over the sorted vertex set --
// the Vandermonde factor normalizing the degree-4 deformation.  Depends only
// on the set, not on the listed order.
template <class R>
typename R::Scalar vandermonde(const R& ring, const Tetra& t) {
    auto s = t.sorted();
    typename R::Scalar c = ring.one();
    for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j)
            c = c * ring.zeta_diff(s[static_cast<std::size_t>(i)], s[static_cast<std::size_t>(j)]);
    return c;
}

// The quadratic weight attached to an ordered tetrahedron, in expanded form
// (six terms, one per vertex pair; no division).  Face generators are
// unoriented, so each face canonicalizes inside the product and the whole
// weight changes sign exactly under odd vertex permutations.
template <class R>
Element<typename R::Scalar> weight_f(const R& ring, const Tetra& t) {
    ring.require_distinct_coordinates();
    using K = typename R::Scalar;
    const auto f = t.face_ids();  // [012, 013, 023, 123] as index triples of t.v
    const auto& v = t.v;
    struct Term {
        int p, q;    // vertex pair (indices into v) giving the coefficient
        int x, y;    // face pair (indices into f)
        int sign;
    };
    static constexpr Term terms[6] = {{0, 1, 0, 1, +1}, {0, 2, 0, 2, -1}, {0, 3, 1, 2, +1},
                                      {1, 2, 0, 3, +1}, {1, 3, 1, 3, -1}, {2, 3, 2, 3, +1}};
    Element<K> w;
    for (const Term& term : terms) {
        K c = ring.zeta_diff(v[static_cast<std::size_t>(term.p)], v[static_cast<std::size_t>(term.q)]);
        if (term.sign < 0) c = -c;
        w += Element<K>::generator(f[static_cast<std::size_t>(term.x)], c) *
             Element<K>::generator(f[static_cast<std::size_t>(term.y)], ring.one());
    }
    return w;
}

// Same weight as the product of two linear factors divided by the last
// coordinate difference.  Exists as an independent construction; agreement
// with weight_f is one of the engine's self-checks.
template <class R>
Element<typename R::Scalar> weight_f_factored(const R& ring, const Tetra& t) {
    ring.require_distinct_coordinates();
    using K = typename R::Scalar;
    const auto f = t.face_ids();
    const auto& v = t.v;
    auto zd = [&](int p, int q) { return ring.zeta_diff(v[static_cast<std::size_t>(p)], v[static_cast<std::size_t>(q)]); };
    Element<K> u;
    u += Element<K>::generator(f[0], zd(1, 2));
    u += Element<K>::generator(f[1], -zd(1, 3));
    u += Element<K>::generator(f[2], zd(2, 3));
    Element<K> w;
    w += Element<K>::generator(f[0], zd(0, 2));
    w += Element<K>::generator(f[1], -zd(0, 3));
    w += Element<K>::generator(f[3], zd(2, 3));
    return (u * w).scaled(ring.divide(ring.one(), zd(2, 3)));
}

// Degree-4 deformation term: sign * lambda * Vandermonde * product of the
// four faces in canonical order.
template <class R>
Element<typename R::Scalar> quartic_deformation(const R& ring, const Tetra& t, const typename R::Scalar& lambda) {
    using K = typename R::Scalar;
    K c = vandermonde(ring, t) * lambda;
    if (orientation_sign(t) < 0) c = -c;
    Mask m = 0;
    for (int fid : t.face_ids()) m |= mask_bit(fid);
    Element<K> e;
    e.add_term(m, c);
    return e;
}

// Degree-0 deformation term: sign * mu.
template <class R>
Element<typename R::Scalar> scalar_deformation(const R& ring, const Tetra& t, const typename R::Scalar& mu) {
    using K = typename R::Scalar;
    K c = mu;
    if (orientation_sign(t) < 0) c = -c;
    return Element<K>::from_scalar(c);
}

template <class R>
Element<typename R::Scalar> weight_g(const R& ring, const Tetra& t, const typename R::Scalar& lambda) {
    return weight_f(ring, t) + quartic_deformation(ring, t, lambda);
}

template <class R>
Element<typename R::Scalar> weight_h(const R& ring, const Tetra& t, const typename R::Scalar& mu) {
    return weight_f(ring, t) + scalar_deformation(ring, t, mu);
}

}  // namespace berezin
