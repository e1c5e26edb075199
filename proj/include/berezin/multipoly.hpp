#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>

#include "berezin/rational.hpp"

namespace berezin {

// The polynomial ring QQ[z1..z5, lam, mu].  z1..z5 are the five vertex
// coordinates; lam and mu are the two deformation parameters, adjoined as
// ordinary indeterminates so that "holds for symbolic lambda" is a plain
// polynomial identity.
inline constexpr int kNumVars = 7;
inline constexpr int kLambdaVar = 5;
inline constexpr int kMuVar = 6;

inline const char* var_name(int v) {
    static const char* names[kNumVars] = {"z1", "z2", "z3", "z4", "z5", "lam", "mu"};
    if (v < 0 || v >= kNumVars) throw std::invalid_argument("variable index out of range");
    return names[v];
}

struct Exponents {
    std::array<std::uint8_t, kNumVars> e{};

    int total() const {
        int t = 0;
        for (auto x : e) t += x;
        return t;
    }
    bool operator==(const Exponents& o) const { return e == o.e; }
};

// Graded lexicographic: total degree first, then z1 > z2 > ... > mu.
struct GradedLexLess {
    bool operator()(const Exponents& a, const Exponents& b) const {
        int ta = a.total(), tb = b.total();
        if (ta != tb) return ta < tb;
        return a.e < b.e;
    }
};

class MultiPoly {
  public:
    using TermMap = std::map<Exponents, Rational, GradedLexLess>;

    MultiPoly() = default;

    static MultiPoly constant(const Rational& c) {
        MultiPoly p;
        if (c != 0) p.terms_[Exponents{}] = c;
        return p;
    }
    static MultiPoly variable(int v) {
        Exponents ex;
        ex.e[static_cast<std::size_t>(v)] = 1;
        MultiPoly p;
        p.terms_[ex] = 1;
        return p;
    }
    // z_i - z_j with 1-based vertex labels; i == j gives the zero polynomial.
    static MultiPoly zeta_difference(int i, int j) {
        if (i < 1 || i > 5 || j < 1 || j > 5) throw std::invalid_argument("vertex label outside 1..5");
        if (i == j) return MultiPoly{};
        MultiPoly p = variable(i - 1);
        p.add_term(Exponents{[&] {
                       Exponents ex;
                       ex.e[static_cast<std::size_t>(j - 1)] = 1;
                       return ex.e;
                   }()},
                   Rational(-1));
        return p;
    }

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const {
        return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.total() == 0);
    }
    // Only valid when is_constant().
    Rational constant_value() const {
        if (terms_.empty()) return Rational(0);
        if (!is_constant()) throw std::logic_error("constant_value on non-constant polynomial");
        return terms_.begin()->second;
    }

    int total_degree() const {  // zero polynomial reports -1
        if (terms_.empty()) return -1;
        return terms_.rbegin()->first.total();
    }
    int degree_in(int v) const {
        int d = -1;
        for (const auto& [ex, c] : terms_) d = std::max(d, static_cast<int>(ex.e[static_cast<std::size_t>(v)]));
        return d;
    }
    int min_degree_in(int v) const {  // zero polynomial reports -1
        if (terms_.empty()) return -1;
        int d = 255;
        for (const auto& [ex, c] : terms_) d = std::min(d, static_cast<int>(ex.e[static_cast<std::size_t>(v)]));
        return d;
    }

    void add_term(const Exponents& ex, const Rational& c) {
        if (c == 0) return;
        auto it = terms_.find(ex);
        if (it == terms_.end()) {
            terms_.emplace(ex, c);
        } else {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    MultiPoly& operator+=(const MultiPoly& o) {
        for (const auto& [ex, c] : o.terms_) add_term(ex, c);
        return *this;
    }
    MultiPoly& operator-=(const MultiPoly& o) {
        for (const auto& [ex, c] : o.terms_) add_term(ex, -c);
        return *this;
    }
    friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
    friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
    MultiPoly operator-() const {
        MultiPoly r;
        for (const auto& [ex, c] : terms_) r.terms_.emplace(ex, -c);
        return r;
    }

    friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
        MultiPoly r;
        for (const auto& [ea, ca] : a.terms_)
            for (const auto& [eb, cb] : b.terms_) {
                Exponents ex;
                for (int v = 0; v < kNumVars; ++v) {
                    int s = ea.e[static_cast<std::size_t>(v)] + eb.e[static_cast<std::size_t>(v)];
                    if (s > 255) throw std::overflow_error("exponent overflow");
                    ex.e[static_cast<std::size_t>(v)] = static_cast<std::uint8_t>(s);
                }
                r.add_term(ex, ca * cb);
            }
        return r;
    }
    MultiPoly& operator*=(const MultiPoly& o) { return *this = *this * o; }

    MultiPoly scaled(const Rational& c) const {
        MultiPoly r;
        if (c == 0) return r;
        for (const auto& [ex, k] : terms_) r.terms_.emplace(ex, k * c);
        return r;
    }

    bool operator==(const MultiPoly& o) const { return terms_ == o.terms_; }

    // Exact division: returns the quotient iff d divides *this exactly.
    // Plain leading-term reduction by a single divisor; for an exact multiple
    // the leading term is divisible at every step, so hitting a non-divisible
    // leading term proves inexactness.
    std::optional<MultiPoly> exact_div(const MultiPoly& d) const {
        if (d.is_zero()) throw std::domain_error("polynomial division by zero");
        MultiPoly rem = *this, quot;
        const auto& [dex, dc] = *d.terms_.rbegin();
        while (!rem.is_zero()) {
            const auto& [rex, rc] = *rem.terms_.rbegin();
            Exponents qex;
            for (int v = 0; v < kNumVars; ++v) {
                auto sv = static_cast<std::size_t>(v);
                if (rex.e[sv] < dex.e[sv]) return std::nullopt;
                qex.e[sv] = static_cast<std::uint8_t>(rex.e[sv] - dex.e[sv]);
            }
            Rational qc = rc / dc;
            MultiPoly t;
            t.terms_.emplace(qex, qc);
            quot += t;
            rem -= t * d;
        }
        return quot;
    }

    const TermMap& terms() const { return terms_; }

    // Raw term-list rendering, descending graded-lex: "2*z1^2*z2 - z3*lam + 1/2".
    std::string str() const {
        if (terms_.empty()) return "0";
        std::ostringstream out;
        bool first = true;
        for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
            const auto& [ex, c] = *it;
            Rational a = c;
            if (first) {
                if (a < 0) {
                    out << "-";
                    a = -a;
                }
            } else {
                out << (a < 0 ? " - " : " + ");
                if (a < 0) a = -a;
            }
            first = false;
            bool has_vars = ex.total() > 0;
            if (!has_vars || a != 1) {
                out << to_string(a);
                if (has_vars) out << "*";
            }
            bool started = false;
            for (int v = 0; v < kNumVars; ++v) {
                int p = ex.e[static_cast<std::size_t>(v)];
                if (p == 0) continue;
                if (started) out << "*";
                started = true;
                out << var_name(v);
                if (p > 1) out << "^" << p;
            }
        }
        return out.str();
    }

  private:
    TermMap terms_;
};

// Exact division by the linear form z_i - z_j (1-based labels, i != j).
inline std::optional<MultiPoly> exact_div_linear(const MultiPoly& p, int i, int j) {
    if (i == j) throw std::domain_error("division by the zero difference z_i - z_i");
    return p.exact_div(MultiPoly::zeta_difference(i, j));
}

}  // namespace berezin
