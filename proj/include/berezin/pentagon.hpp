#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "berezin/rings.hpp"
#include "berezin/weights.hpp"

namespace berezin {

enum class WeightKind { f, g, h, composite };

inline const char* weight_kind_name(WeightKind k) {
    switch (k) {
        case WeightKind::f: return "f";
        case WeightKind::g: return "g";
        case WeightKind::h: return "h";
        case WeightKind::composite: return "composite";
    }
    return "?";
}

// A weight family: the base quadratic weight plus the deformations selected
// by `kind`.  lambda scales the degree-4 term, mu the degree-0 term; each is
// an indeterminate of the coefficient field in symbolic runs or a concrete
// value otherwise.
template <class K>
struct WeightFamily {
    WeightKind kind = WeightKind::f;
    K lambda{};
    K mu{};
};

template <class R>
WeightFamily<typename R::Scalar> make_family(const R& ring, WeightKind kind) {
    WeightFamily<typename R::Scalar> fam;
    fam.kind = kind;
    fam.lambda = (kind == WeightKind::g || kind == WeightKind::composite) ? ring.lambda_param() : ring.zero();
    fam.mu = (kind == WeightKind::h || kind == WeightKind::composite) ? ring.mu_param() : ring.zero();
    return fam;
}

template <class R>
Element<typename R::Scalar> make_weight(const R& ring, const WeightFamily<typename R::Scalar>& fam, const Tetra& t) {
    auto w = weight_f(ring, t);
    if (fam.kind == WeightKind::g || fam.kind == WeightKind::composite)
        w += quartic_deformation(ring, t, fam.lambda);
    if (fam.kind == WeightKind::h || fam.kind == WeightKind::composite)
        w += scalar_deformation(ring, t, fam.mu);
    return w;
}

enum class Side { lhs, rhs };

// The frozen shape of the identity: tetrahedra in printed product order and
// inner faces in printed integration order (first entry innermost).
inline const std::vector<Tetra>& side_tetrahedra(Side s) {
    static const std::vector<Tetra> lhs = {Tetra(1, 2, 3, 4), Tetra(1, 2, 3, 5)};
    static const std::vector<Tetra> rhs = {Tetra(1, 2, 4, 5), Tetra(2, 3, 4, 5), Tetra(1, 3, 4, 5)};
    return s == Side::lhs ? lhs : rhs;
}

inline const std::vector<int>& side_integration_faces(Side s) {
    static const std::vector<int> lhs = {face_id(1, 2, 3)};
    static const std::vector<int> rhs = {face_id(3, 4, 5), face_id(2, 4, 5), face_id(1, 4, 5)};
    return s == Side::lhs ? lhs : rhs;
}

inline Mask side_inner_mask(Side s) {
    Mask m = 0;
    for (int f : side_integration_faces(s)) m |= mask_bit(f);
    return m;
}

// The six faces shared by both sides; every surviving monomial lives here.
inline Mask outer_face_mask() {
    return mask_of({face_id(1, 2, 4), face_id(1, 2, 5), face_id(1, 3, 4), face_id(1, 3, 5), face_id(2, 3, 4),
                    face_id(2, 3, 5)});
}

template <class R>
Element<typename R::Scalar> pentagon_side(const R& ring, const WeightFamily<typename R::Scalar>& fam, Side s) {
    using K = typename R::Scalar;
    Element<K> prod = Element<K>::from_scalar(ring.one());
    for (const Tetra& t : side_tetrahedra(s)) prod = prod * make_weight(ring, fam, t);
    const auto& faces = side_integration_faces(s);
    Element<K> integrated = berezin_multi(prod, std::span<const int>(faces.data(), faces.size()));
    if (s == Side::rhs) {
        K prefactor = ring.divide(-ring.one(), ring.zeta_diff(4, 5));
        integrated = integrated.scaled(prefactor);
    }
    return integrated;
}

template <class R>
Element<typename R::Scalar> pentagon_lhs(const R& ring, const WeightFamily<typename R::Scalar>& fam) {
    return pentagon_side(ring, fam, Side::lhs);
}

template <class R>
Element<typename R::Scalar> pentagon_rhs(const R& ring, const WeightFamily<typename R::Scalar>& fam) {
    return pentagon_side(ring, fam, Side::rhs);
}

template <class K>
struct PentagonReport {
    Element<K> lhs, rhs, residual;
    bool zero = false;
    std::map<int, std::size_t> lhs_degrees, rhs_degrees, residual_degrees;
};

template <class R>
PentagonReport<typename R::Scalar> pentagon_residual(const R& ring, const WeightFamily<typename R::Scalar>& fam) {
    PentagonReport<typename R::Scalar> rep;
    rep.lhs = pentagon_lhs(ring, fam);
    rep.rhs = pentagon_rhs(ring, fam);
    rep.residual = rep.lhs - rep.rhs;
    rep.zero = rep.residual.is_zero();
    rep.lhs_degrees = rep.lhs.degree_histogram();
    rep.rhs_degrees = rep.rhs.degree_histogram();
    rep.residual_degrees = rep.residual.degree_histogram();
    return rep;
}

// Designated single-monomial checks for the two deformation identities: the
// degree-5 monomial that isolates the quartic deformation and a degree-1
// monomial for the scalar one.
inline Mask deg5_check_monomial() {
    return mask_of({face_id(1, 2, 4), face_id(1, 2, 5), face_id(1, 3, 4), face_id(1, 3, 5), face_id(2, 3, 5)});
}
inline Mask deg1_check_monomial() { return mask_bit(face_id(2, 3, 4)); }

template <class R>
std::pair<typename R::Scalar, typename R::Scalar> coefficient_pair(const R& ring,
                                                                   const WeightFamily<typename R::Scalar>& fam,
                                                                   Mask monomial) {
    return {coefficient_of(ring, pentagon_lhs(ring, fam), monomial),
            coefficient_of(ring, pentagon_rhs(ring, fam), monomial)};
}

template <class R>
std::pair<typename R::Scalar, typename R::Scalar> theorem_check(const R& ring, WeightKind kind, Mask monomial = 0) {
    if (kind != WeightKind::g && kind != WeightKind::h)
        throw std::invalid_argument("single-monomial check is defined for the g and h families");
    if (monomial == 0) monomial = (kind == WeightKind::g) ? deg5_check_monomial() : deg1_check_monomial();
    return coefficient_pair(ring, make_family(ring, kind), monomial);
}

// Exploration of the combined deformation: residual of the family carrying
// both terms.  The zero flag reflects whatever the computation finds.
template <class R>
PentagonReport<typename R::Scalar> composite_explore(const R& ring, const typename R::Scalar& lambda,
                                                     const typename R::Scalar& mu) {
    WeightFamily<typename R::Scalar> fam;
    fam.kind = WeightKind::composite;
    fam.lambda = lambda;
    fam.mu = mu;
    return pentagon_residual(ring, fam);
}

// True when every residual coefficient is divisible by lambda*mu (checked on
// numerators; exact statement of the cross-term structure).
inline bool divisible_by_lambda_mu(const Element<Scalar>& residual) {
    for (const auto& [m, c] : residual.terms()) {
        if (c.numerator().min_degree_in(kLambdaVar) < 1) return false;
        if (c.numerator().min_degree_in(kMuVar) < 1) return false;
    }
    return true;
}

}  // namespace berezin
