#pragma once

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <vector>

#include "berezin/pentagon.hpp"

namespace berezin {

// Coefficient matrix of a bilinear form: rows labelled by auxiliary
// generators, columns by face generators.
template <class K>
struct FormMatrix {
    std::vector<int> rows;  // aux generator ids
    std::vector<int> cols;  // face generator ids
    std::vector<std::vector<K>> entry;

    int row_pos(int aux) const {
        auto it = std::find(rows.begin(), rows.end(), aux);
        if (it == rows.end()) throw std::invalid_argument("row label not in matrix");
        return static_cast<int>(it - rows.begin());
    }
    int col_pos(int face) const {
        auto it = std::find(cols.begin(), cols.end(), face);
        if (it == cols.end()) throw std::invalid_argument("column label not in matrix");
        return static_cast<int>(it - cols.begin());
    }
    const K& at(int aux, int face) const {
        return entry[static_cast<std::size_t>(row_pos(aux))][static_cast<std::size_t>(col_pos(face))];
    }
};

// The 2x4 coefficient matrix of one tetrahedron's bilinear form.  Columns
// follow substitution order (faces dropping the 4th, 3rd, 2nd, 1st vertex);
// the second row carries the 1/(z_{i3} - z_{i4}) normalization.
template <class R>
FormMatrix<typename R::Scalar> tetra_form_matrix(const R& ring, const Tetra& t) {
    using K = typename R::Scalar;
    const auto& v = t.v;
    auto zd = [&](int p, int q) { return ring.zeta_diff(v[static_cast<std::size_t>(p)], v[static_cast<std::size_t>(q)]); };
    FormMatrix<K> m;
    m.rows = {t.aux1(), t.aux2()};
    const auto f = t.face_ids();
    m.cols.assign(f.begin(), f.end());
    K inv34 = ring.divide(ring.one(), zd(2, 3));
    m.entry = {{zd(1, 2), -zd(1, 3), zd(2, 3), ring.zero()},
               {zd(0, 2) * inv34, -(zd(0, 3) * inv34), ring.zero(), ring.one()}};
    return m;
}

// The bilinear form b . M . a as a Grassmann element (auxiliary generator
// times face generator, in that written order).
template <class R>
Element<typename R::Scalar> bilinear_form(const R& ring, const Tetra& t) {
    using K = typename R::Scalar;
    FormMatrix<K> m = tetra_form_matrix(ring, t);
    Element<K> e;
    for (std::size_t r = 0; r < m.rows.size(); ++r)
        for (std::size_t c = 0; c < m.cols.size(); ++c) {
            const K& coeff = m.entry[r][c];
            if (coeff.is_zero()) continue;
            e += Element<K>::generator(m.rows[r], coeff) * Element<K>::generator(m.cols[c], ring.one());
        }
    return e;
}

// Gaussian-side form for a weight family member.  For g it gains a
// face-face term (five of the six Vandermonde differences: the z1-z2 factor
// re-emerges during integration), for h an auxiliary-auxiliary term.  The
// combined family has no such form.
template <class R>
Element<typename R::Scalar> form_for_weight(const R& ring, WeightKind kind, const Tetra& t,
                                            const typename R::Scalar& lambda, const typename R::Scalar& mu) {
    using K = typename R::Scalar;
    Element<K> e = bilinear_form(ring, t);
    if (kind == WeightKind::g) {
        const auto& v = t.v;
        auto zd = [&](int p, int q) {
            return ring.zeta_diff(v[static_cast<std::size_t>(p)], v[static_cast<std::size_t>(q)]);
        };
        K c = zd(0, 2) * zd(0, 3) * zd(1, 2) * zd(1, 3) * zd(2, 3) * lambda;
        if (orientation_sign(t) < 0) c = -c;
        const auto f = t.face_ids();
        e += Element<K>::generator(f[2], c) * Element<K>::generator(f[3], ring.one());
    } else if (kind == WeightKind::h) {
        K c = mu;
        if (orientation_sign(t) < 0) c = -c;
        e += Element<K>::generator(t.aux2(), c) * Element<K>::generator(t.aux1(), ring.one());
    } else if (kind == WeightKind::composite) {
        throw std::invalid_argument("no Gaussian form for the combined family");
    }
    return e;
}

// Integrates the auxiliary pair out of exp(form); must reproduce the weight.
template <class R>
Element<typename R::Scalar> integrate_out_aux(const R& ring, const Element<typename R::Scalar>& form,
                                              const Tetra& t) {
    return berezin_multi(exp(ring, form), {t.aux1(), t.aux2()});
}

// Stacked form matrix of one pentagon side: per-tetrahedron blocks embedded
// into the union column space.  Rows in auxiliary-generator order, columns
// in face order.
template <class R>
FormMatrix<typename R::Scalar> pentagon_side_matrix(const R& ring, Side s) {
    using K = typename R::Scalar;
    std::vector<Tetra> tets = side_tetrahedra(s);
    std::sort(tets.begin(), tets.end(), [](const Tetra& a, const Tetra& b) {
        return tet_index(a.sorted()) < tet_index(b.sorted());
    });
    FormMatrix<K> big;
    Mask col_mask = 0;
    for (const Tetra& t : tets) {
        big.rows.push_back(t.aux1());
        big.rows.push_back(t.aux2());
        for (int f : t.face_ids()) col_mask |= mask_bit(f);
    }
    for (int f : mask_generators(col_mask)) big.cols.push_back(f);
    big.entry.assign(big.rows.size(), std::vector<K>(big.cols.size(), ring.zero()));
    for (const Tetra& t : tets) {
        FormMatrix<K> a = tetra_form_matrix(ring, t);
        for (std::size_t r = 0; r < a.rows.size(); ++r)
            for (std::size_t c = 0; c < a.cols.size(); ++c)
                big.entry[static_cast<std::size_t>(big.row_pos(a.rows[r]))]
                         [static_cast<std::size_t>(big.col_pos(a.cols[c]))] = a.entry[r][c];
    }
    return big;
}

// Determinant by Bareiss one-step fraction-free elimination.  Denominators
// are cleared rowwise first, so every interior division is an exact
// polynomial division; the cleared factors are divided back out at the end.
template <class R>
typename R::Scalar fraction_free_det(const R& ring, std::vector<std::vector<typename R::Scalar>> a) {
    using K = typename R::Scalar;
    std::size_t n = a.size();
    if (n == 0) return ring.one();
    for (const auto& row : a)
        if (row.size() != n) throw std::invalid_argument("determinant of a non-square matrix");
    K cleared = ring.one();
    for (auto& row : a) cleared = cleared * ring.clear_row_denominators(std::span<K>(row.data(), row.size()));
    K prev = ring.one();
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        std::size_t pivot = n;
        for (std::size_t r = k; r < n; ++r)
            if (!a[r][k].is_zero()) {
                pivot = r;
                break;
            }
        if (pivot == n) return ring.zero();
        if (pivot != k) {
            std::swap(a[pivot], a[k]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j)
                a[i][j] = ring.exact_div(a[k][k] * a[i][j] - a[i][k] * a[k][j], prev);
        prev = a[k][k];
    }
    K det = a[n - 1][n - 1];
    if (sign < 0) det = -det;
    return ring.divide(det, cleared);
}

// Minor over explicit row/column label sets, kept in the matrix's own order.
template <class R>
typename R::Scalar minor_det(const R& ring, const FormMatrix<typename R::Scalar>& m, const std::vector<int>& row_labels,
                             const std::vector<int>& col_labels) {
    using K = typename R::Scalar;
    std::vector<std::vector<K>> sub;
    std::vector<int> rsel, csel;
    for (int aux : m.rows)
        if (std::find(row_labels.begin(), row_labels.end(), aux) != row_labels.end()) rsel.push_back(m.row_pos(aux));
    for (int face : m.cols)
        if (std::find(col_labels.begin(), col_labels.end(), face) != col_labels.end()) csel.push_back(m.col_pos(face));
    if (rsel.size() != row_labels.size() || csel.size() != col_labels.size())
        throw std::invalid_argument("minor labels not found in matrix");
    for (int r : rsel) {
        std::vector<K> row;
        for (int c : csel) row.push_back(m.entry[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)]);
        sub.push_back(std::move(row));
    }
    return fraction_free_det(ring, std::move(sub));
}

// Coefficient extraction through the stacked matrix: the coefficient of a
// degree-3 outer monomial equals the minor over all rows and the inner-plus-
// monomial columns, up to the integration bookkeeping sign (computed by
// running the engine's own Berezin steps on that single monomial), a
// constant per-side sign fixed by calibration, and the rhs prefactor.
template <class R>
struct MinorRule {
    Side side;
    FormMatrix<typename R::Scalar> matrix;
    int sigma = 0;  // calibrated per-side constant, +1 or -1
};

namespace detail {

template <class R>
typename R::Scalar raw_minor_coefficient(const R& ring, const FormMatrix<typename R::Scalar>& matrix, Side side,
                                         Mask monomial) {
    using K = typename R::Scalar;
    Mask outer = outer_face_mask();
    if ((monomial & ~outer) != 0)
        throw std::invalid_argument("monomial must consist of outer faces of the identity");
    if (mask_degree(monomial) != 3) throw std::invalid_argument("minor route needs a degree-3 monomial");
    Mask colmask = monomial | side_inner_mask(side);
    std::vector<int> cols = mask_generators(colmask);
    K det = minor_det(ring, matrix, matrix.rows, cols);

    // Bookkeeping sign: integrate the bare monomial (selected faces times all
    // auxiliary generators) the same way the side integral does.
    Mask full = colmask;
    for (int aux : matrix.rows) full |= mask_bit(aux);
    Element<K> probe;
    probe.add_term(full, ring.one());
    probe = berezin_multi(probe, std::span<const int>(matrix.rows.data(), matrix.rows.size()));
    const auto& faces = side_integration_faces(side);
    probe = berezin_multi(probe, std::span<const int>(faces.data(), faces.size()));
    if (probe.term_count() != 1 || probe.terms().begin()->first != monomial)
        throw std::logic_error("bookkeeping probe did not reduce to the requested monomial");
    K coeff = det * probe.terms().begin()->second;
    if (side == Side::rhs) coeff = ring.divide(-coeff, ring.zeta_diff(4, 5));
    return coeff;
}

}  // namespace detail

template <class R>
MinorRule<R> make_minor_rule(const R& ring, Side side) {
    using K = typename R::Scalar;
    MinorRule<R> rule;
    rule.side = side;
    rule.matrix = pentagon_side_matrix(ring, side);
    Mask reference = mask_of({face_id(1, 2, 4), face_id(1, 2, 5), face_id(1, 3, 5)});
    K raw = detail::raw_minor_coefficient(ring, rule.matrix, side, reference);
    K expanded = coefficient_of(ring, pentagon_side(ring, make_family(ring, WeightKind::f), side), reference);
    if (expanded == raw) {
        rule.sigma = 1;
    } else if (expanded == -raw) {
        rule.sigma = -1;
    } else {
        throw std::logic_error("minor-rule calibration failed: routes differ by more than a sign");
    }
    return rule;
}

template <class R>
typename R::Scalar coefficient_via_minor(const R& ring, const MinorRule<R>& rule, Mask monomial) {
    using K = typename R::Scalar;
    K raw = detail::raw_minor_coefficient(ring, rule.matrix, rule.side, monomial);
    return rule.sigma < 0 ? -raw : raw;
}

// One pentagon side computed entirely from the exponent forms: exponentiate
// the sum of the per-tetrahedron forms (all even, so the sum exponentiates
// to the product), integrate out all auxiliary generators, then the inner
// faces.  Must agree with the direct product-of-weights expansion.
template <class R>
Element<typename R::Scalar> pentagon_side_via_forms(const R& ring, const WeightFamily<typename R::Scalar>& fam,
                                                    Side s) {
    using K = typename R::Scalar;
    Element<K> total;
    std::vector<int> auxes;
    for (const Tetra& t : side_tetrahedra(s)) {
        total += form_for_weight(ring, fam.kind, t, fam.lambda, fam.mu);
        auxes.push_back(t.aux1());
        auxes.push_back(t.aux2());
    }
    std::sort(auxes.begin(), auxes.end());
    Element<K> e = exp(ring, total);
    e = berezin_multi(e, std::span<const int>(auxes.data(), auxes.size()));
    const auto& faces = side_integration_faces(s);
    e = berezin_multi(e, std::span<const int>(faces.data(), faces.size()));
    if (s == Side::rhs) e = e.scaled(ring.divide(-ring.one(), ring.zeta_diff(4, 5)));
    return e;
}

}  // namespace berezin
