// Acceptance runner: walks the ten acceptance criteria in order, one
// PASS/FAIL line each, with per-criterion wall-clock limits where the
// criterion carries one.  Exits nonzero if anything fails.

#include <chrono>
#include <functional>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>

#include "berezin/berezin.hpp"
#include "support/axioms.hpp"

using namespace berezin;

namespace {

int failures = 0;

void criterion(int number, const std::string& title, double limit_ms,
               const std::function<std::pair<bool, std::string>()>& body) {
    auto start = std::chrono::steady_clock::now();
    bool ok = false;
    std::string detail;
    try {
        auto [good, text] = body();
        ok = good;
        detail = text;
    } catch (const std::exception& e) {
        ok = false;
        detail = std::string("exception: ") + e.what();
    }
    double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    if (limit_ms > 0 && ms > limit_ms) {
        ok = false;
        detail += " [time limit exceeded]";
    }
    std::ostringstream line;
    line << (ok ? "[PASS] " : "[FAIL] ") << number << " " << title << ": " << detail << " (" << std::fixed
         << std::setprecision(1) << ms << " ms";
    if (limit_ms > 0) line << ", limit " << std::setprecision(0) << limit_ms << " ms";
    line << ")";
    std::cout << line.str() << std::endl;
    if (!ok) ++failures;
}

std::string plural_monomials(std::size_t n) { return std::to_string(n) + " monomial" + (n == 1 ? "" : "s"); }

}  // namespace

int main() {
    SymbolicRing ring;

    criterion(1, "base pentagon identity, symbolic", 10000, [&] {
        auto rep = pentagon_residual(ring, make_family(ring, WeightKind::f));
        return std::pair{rep.zero && rep.residual.term_count() == 0,
                         "residual has " + plural_monomials(rep.residual.term_count())};
    });

    criterion(2, "quartic deformation identity, symbolic lambda", 60000, [&] {
        auto rep = pentagon_residual(ring, make_family(ring, WeightKind::g));
        return std::pair{rep.zero, "residual has " + plural_monomials(rep.residual.term_count())};
    });

    criterion(3, "scalar deformation identity, symbolic mu", 60000, [&] {
        auto rep = pentagon_residual(ring, make_family(ring, WeightKind::h));
        return std::pair{rep.zero, "residual has " + plural_monomials(rep.residual.term_count())};
    });

    criterion(4, "designated degree-5 monomial agrees on both sides", 0, [&] {
        auto [lhs, rhs] = theorem_check(ring, WeightKind::g);
        bool ok = lhs == rhs && !lhs.is_zero();
        return std::pair{ok, ok ? "exact match, nonzero" : "sides differ"};
    });

    criterion(5, "exponent forms reproduce all three weights on all five tetrahedra", 0, [&] {
        int good = 0, total = 0;
        for (auto kind : {WeightKind::f, WeightKind::g, WeightKind::h}) {
            auto fam = make_family(ring, kind);
            for (int i = 0; i < kNumTets; ++i) {
                Tetra t(tet_vertices(i));
                ++total;
                if (integrate_out_aux(ring, form_for_weight(ring, kind, t, fam.lambda, fam.mu), t) ==
                    make_weight(ring, fam, t))
                    ++good;
            }
        }
        return std::pair{good == total, std::to_string(good) + "/" + std::to_string(total) + " reproductions exact"};
    });

    criterion(6, "minor rule matches direct expansion on all outer monomials", 0, [&] {
        auto fam = make_family(ring, WeightKind::f);
        int good = 0, total = 0;
        for (Side s : {Side::lhs, Side::rhs}) {
            auto rule = make_minor_rule(ring, s);
            auto direct = pentagon_side(ring, fam, s);
            std::vector<int> outer = mask_generators(outer_face_mask());
            for (std::size_t i = 0; i < outer.size(); ++i)
                for (std::size_t j = i + 1; j < outer.size(); ++j)
                    for (std::size_t k = j + 1; k < outer.size(); ++k) {
                        Mask m = mask_bit(outer[i]) | mask_bit(outer[j]) | mask_bit(outer[k]);
                        ++total;
                        if (coefficient_via_minor(ring, rule, m) == coefficient_of(ring, direct, m)) ++good;
                    }
        }
        return std::pair{good == total && total == 40,
                         std::to_string(good) + "/" + std::to_string(total) + " coefficients exact"};
    });

    criterion(7, "deformation differences are homogeneous of the right degree", 0, [&] {
        auto base = make_family(ring, WeightKind::f);
        bool ok = true;
        for (Side s : {Side::lhs, Side::rhs}) {
            auto dg = pentagon_side(ring, make_family(ring, WeightKind::g), s) - pentagon_side(ring, base, s);
            ok = ok && !dg.is_zero();
            for (const auto& [m, c] : dg.terms()) ok = ok && mask_degree(m) == 5;
            auto dh = pentagon_side(ring, make_family(ring, WeightKind::h), s) - pentagon_side(ring, base, s);
            ok = ok && !dh.is_zero();
            for (const auto& [m, c] : dh.terms()) ok = ok && mask_degree(m) == 1;
        }
        return std::pair{ok, ok ? "degree 5 and degree 1 on both sides" : "wrong degree structure"};
    });

    criterion(8, "algebra and integral axiom suite", 0, [&] {
        auto st = testsupport::run_axiom_cases(17, 25);
        // orientation antisymmetry over all 24 orderings, on top of the randomized cases
        std::array<int, 4> v{1, 2, 3, 4};
        auto sorted_w = weight_f(ring, Tetra(1, 2, 3, 4));
        do {
            Tetra t(v[0], v[1], v[2], v[3]);
            bool flip = t.parity_to_sorted() < 0;
            st.check(weight_f(ring, t) == (flip ? -sorted_w : sorted_w), "orientation antisymmetry " + t.label());
        } while (std::next_permutation(v.begin(), v.end()));
        std::string detail = std::to_string(st.cases - st.failures) + "/" + std::to_string(st.cases) + " checks";
        if (!st.notes.empty()) detail += "; first failure: " + st.notes.front();
        return std::pair{st.failures == 0 && st.cases >= 224, detail};
    });

    criterion(9, "modular points agree with the symbolic computation", 5000, [&] {
        struct SidePair {
            Element<Scalar> lhs, rhs;
        };
        std::map<WeightKind, SidePair> symbolic;
        for (auto kind : {WeightKind::f, WeightKind::g, WeightKind::h}) {
            auto fam = make_family(ring, kind);
            symbolic[kind] = {pentagon_side(ring, fam, Side::lhs), pentagon_side(ring, fam, Side::rhs)};
        }
        std::mt19937_64 rng(2026);
        int good = 0, total = 0;
        for (int point = 0; point < 20; ++point) {
            ModularRing mring = ModularRing::sample(kDefaultPrime, rng);
            for (auto kind : {WeightKind::f, WeightKind::g, WeightKind::h}) {
                auto fam = make_family(mring, kind);
                auto mlhs = pentagon_side(mring, fam, Side::lhs);
                auto mrhs = pentagon_side(mring, fam, Side::rhs);
                bool ok = (mlhs - mrhs).is_zero();
                // the natively modular sides must equal the evaluated symbolic sides
                for (const auto& [m, c] : symbolic[kind].lhs.terms())
                    ok = ok && eval_modp(c, mring) == coefficient_of(mring, mlhs, m);
                ok = ok && symbolic[kind].lhs.term_count() == mlhs.term_count();
                for (const auto& [m, c] : symbolic[kind].rhs.terms())
                    ok = ok && eval_modp(c, mring) == coefficient_of(mring, mrhs, m);
                ok = ok && symbolic[kind].rhs.term_count() == mrhs.term_count();
                ++total;
                if (ok) ++good;
            }
        }
        return std::pair{good == total && total == 60,
                         std::to_string(good) + "/" + std::to_string(total) + " point-weight checks"};
    });

    criterion(10, "composite deformation degenerates and factors correctly", 0, [&] {
        auto lam = ring.lambda_param();
        auto mu = ring.mu_param();
        bool zero_lam = composite_explore(ring, ring.zero(), mu).zero;
        bool zero_mu = composite_explore(ring, lam, ring.zero()).zero;
        auto rep = composite_explore(ring, lam, mu);
        bool factors = !rep.zero && divisible_by_lambda_mu(rep.residual);
        std::string detail = std::string("zero at lambda=0: ") + (zero_lam ? "yes" : "no") +
                             ", zero at mu=0: " + (zero_mu ? "yes" : "no") + ", generic residual " +
                             plural_monomials(rep.residual.term_count()) + " all divisible by lam*mu: " +
                             (factors ? "yes" : "no");
        return std::pair{zero_lam && zero_mu && factors, detail};
    });

    std::cout << "acceptance: " << (10 - failures) << "/10 criteria passed" << std::endl;
    return failures == 0 ? 0 : 1;
}
