#pragma once

#include <string>
#include <vector>

#include "berezin/gaussian.hpp"
#include "berezin/rings.hpp"

namespace berezin {

// Display form of an exact scalar: leading rational, then lam/mu powers,
// then greedily extracted coordinate-difference factors, then whatever
// polynomial remains (parenthesized raw term list), over the denominator
// factors.  Deterministic; used for reports only, never for computation.
inline std::string to_display(const Scalar& x) {
    if (x.is_zero()) return "0";
    MultiPoly n = x.numerator();
    int lam_pow = std::max(0, n.min_degree_in(kLambdaVar));
    int mu_pow = std::max(0, n.min_degree_in(kMuVar));
    for (int k = 0; k < lam_pow; ++k) n = *n.exact_div(MultiPoly::variable(kLambdaVar));
    for (int k = 0; k < mu_pow; ++k) n = *n.exact_div(MultiPoly::variable(kMuVar));
    std::vector<int> zeta_pow(ZetaFactors::kPairs, 0);
    bool progress = true;
    while (progress && !n.is_constant()) {
        progress = false;
        for (int s = 0; s < ZetaFactors::kPairs && !progress; ++s) {
            auto [i, j] = ZetaFactors::slot_pair(s);
            if (auto q = exact_div_linear(n, i, j)) {
                n = std::move(*q);
                ++zeta_pow[static_cast<std::size_t>(s)];
                progress = true;
            }
        }
    }

    Rational c(1);
    bool residual = !n.is_constant();
    if (!residual) c = n.constant_value();

    std::string sign;
    if (c < 0) {
        sign = "-";
        c = -c;
    }
    auto pair_str = [](int s) {
        auto [i, j] = ZetaFactors::slot_pair(s);
        return "(z" + std::to_string(i) + "-z" + std::to_string(j) + ")";
    };
    std::vector<std::string> factors;
    for (int k = 0; k < lam_pow; ++k) factors.push_back("lam");
    for (int k = 0; k < mu_pow; ++k) factors.push_back("mu");
    for (int s = 0; s < ZetaFactors::kPairs; ++s) {
        int p = zeta_pow[static_cast<std::size_t>(s)];
        if (p == 1) factors.push_back(pair_str(s));
        if (p > 1) factors.push_back(pair_str(s) + "^" + std::to_string(p));
    }
    if (residual) factors.push_back("(" + n.str() + ")");

    std::string body;
    if (factors.empty()) {
        body = to_string(c);
    } else {
        if (c != 1) body = to_string(c) + "*";
        for (std::size_t i = 0; i < factors.size(); ++i) {
            if (i) body += "*";
            body += factors[i];
        }
    }

    std::string den;
    if (!x.denominator().empty()) {
        std::vector<std::string> dfac;
        for (int s = 0; s < ZetaFactors::kPairs; ++s) {
            int p = x.denominator().count(s);
            if (p == 1) dfac.push_back(pair_str(s));
            if (p > 1) dfac.push_back(pair_str(s) + "^" + std::to_string(p));
        }
        if (dfac.size() == 1) {
            den = "/" + dfac[0];
        } else {
            den = "/(";
            for (std::size_t i = 0; i < dfac.size(); ++i) {
                if (i) den += "*";
                den += dfac[i];
            }
            den += ")";
        }
    }
    return sign + body + den;
}

inline std::string to_display(const Fp& x) { return x.str(); }

// "coeff*monomial" with the usual 1/-1 elisions.
template <class K>
std::string term_display(Mask m, const K& c) {
    std::string cs = to_display(c);
    if (m == 0) return cs;
    std::string mono = monomial_label(m);
    if (cs == "1") return mono;
    if (cs == "-1") return "-" + mono;
    return cs + "*" + mono;
}

// One line per term, lower degree first, then lexicographic.
template <class K>
std::vector<std::string> element_lines(const Element<K>& e) {
    std::vector<Mask> order;
    for (const auto& [m, c] : e.terms()) order.push_back(m);
    std::sort(order.begin(), order.end(), monomial_render_less);
    std::vector<std::string> out;
    for (Mask m : order) out.push_back(term_display(m, e.terms().at(m)));
    if (out.empty()) out.push_back("0");
    return out;
}

template <class K>
std::string element_display(const Element<K>& e) {
    auto lines = element_lines(e);
    std::string out;
    for (std::size_t i = 0; i < lines.size(); ++i) {
        if (i) out += (lines[i][0] == '-' ? " - " + lines[i].substr(1) : " + " + lines[i]);
        else out += lines[i];
    }
    return out;
}

// Labelled grid with padded columns.
template <class K>
std::vector<std::string> matrix_lines(const FormMatrix<K>& m) {
    std::vector<std::vector<std::string>> cells;
    std::vector<std::string> head{""};
    for (int f : m.cols) head.push_back(generator_label(f));
    cells.push_back(head);
    for (std::size_t r = 0; r < m.rows.size(); ++r) {
        std::vector<std::string> row{generator_label(m.rows[r])};
        for (std::size_t c = 0; c < m.cols.size(); ++c) row.push_back(to_display(m.entry[r][c]));
        cells.push_back(row);
    }
    std::vector<std::size_t> width(cells[0].size(), 0);
    for (const auto& row : cells)
        for (std::size_t c = 0; c < row.size(); ++c) width[c] = std::max(width[c], row[c].size());
    std::vector<std::string> out;
    for (const auto& row : cells) {
        std::string line;
        for (std::size_t c = 0; c < row.size(); ++c) {
            std::string cell = row[c];
            cell.resize(width[c], ' ');
            line += cell;
            if (c + 1 < row.size()) line += "  ";
        }
        while (!line.empty() && line.back() == ' ') line.pop_back();
        out.push_back(line);
    }
    return out;
}

}  // namespace berezin
