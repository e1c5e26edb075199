#pragma once

#include <chrono>
#include <cstdint>
#include <future>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"

#include "berezin/gaussian.hpp"
#include "berezin/pentagon.hpp"
#include "berezin/render.hpp"

namespace berezin::cli {

using nlohmann::json;

struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Everything a single run needs, filled either by the argument parser or
// directly by tests.  String-typed knobs keep the "symbolic" sentinel and
// rational literals in one field.
struct RunConfig {
    std::string command;  // verify | coeff | show | crosscheck
    WeightKind weight = WeightKind::f;
    std::string mode = "symbolic";  // symbolic | modp
    std::uint64_t prime = kDefaultPrime;
    int trials = 20;
    std::uint64_t seed = 0;
    std::string lambda = "symbolic";  // "symbolic" or a rational literal
    std::string mu = "symbolic";
    std::string zeta;               // empty, or five comma-separated rationals
    std::string output = "text";    // text | structured
    std::string monomial;           // coeff: comma-separated face triples
    std::string side = "lhs";       // coeff: lhs | rhs
    bool both = false;              // coeff: compare the two sides
    std::string tet = "1234";       // show: tetrahedron vertices
    std::string object;             // show: weight | matrix-A | matrix-lhs | matrix-rhs | form
};

inline WeightKind parse_weight_name(const std::string& name) {
    if (name == "f") return WeightKind::f;
    if (name == "g") return WeightKind::g;
    if (name == "h") return WeightKind::h;
    if (name == "composite") return WeightKind::composite;
    throw ConfigError("unknown weight '" + name + "' (expected f, g, h or composite)");
}

inline Rational parse_rational_or_fail(const std::string& text, const std::string& what) {
    try {
        return parse_rational(text);
    } catch (const std::exception& e) {
        throw ConfigError(what + ": " + e.what());
    }
}

inline std::optional<std::array<Rational, 5>> parse_zeta_list(const std::string& text) {
    if (text.empty()) return std::nullopt;
    std::array<Rational, 5> z;
    std::stringstream ss(text);
    std::string item;
    std::size_t n = 0;
    while (std::getline(ss, item, ',')) {
        if (n >= 5) throw ConfigError("--zeta needs exactly five comma-separated rationals");
        z[n++] = parse_rational_or_fail(item, "--zeta entry '" + item + "'");
    }
    if (n != 5) throw ConfigError("--zeta needs exactly five comma-separated rationals");
    for (int i = 0; i < 5; ++i)
        for (int j = i + 1; j < 5; ++j)
            if (z[static_cast<std::size_t>(i)] == z[static_cast<std::size_t>(j)])
                throw ConfigError("--zeta values must be pairwise distinct (z" + std::to_string(i + 1) + " = z" +
                                  std::to_string(j + 1) + ")");
    return z;
}

inline void validate_config(const RunConfig& c) {
    if (c.mode != "symbolic" && c.mode != "modp") throw ConfigError("--mode must be symbolic or modp");
    if (c.output != "text" && c.output != "structured") throw ConfigError("--output must be text or structured");
    if (c.mode == "modp") {
        if (c.trials < 1) throw ConfigError("--trials must be at least 1 in modp mode");
        if (c.prime < 11 || c.prime % 2 == 0 || !is_prime_u64(c.prime))
            throw ConfigError("--prime must be an odd prime >= 11");
    }
    if (c.lambda != "symbolic") parse_rational_or_fail(c.lambda, "--lambda");
    if (c.mu != "symbolic") parse_rational_or_fail(c.mu, "--mu");
    parse_zeta_list(c.zeta);
}

inline SymbolicRing symbolic_ring(const RunConfig& c) {
    auto z = parse_zeta_list(c.zeta);
    return z ? SymbolicRing(*z) : SymbolicRing();
}

inline WeightFamily<Scalar> symbolic_family(const SymbolicRing& ring, const RunConfig& c) {
    WeightFamily<Scalar> fam;
    fam.kind = c.weight;
    bool uses_lambda = c.weight == WeightKind::g || c.weight == WeightKind::composite;
    bool uses_mu = c.weight == WeightKind::h || c.weight == WeightKind::composite;
    fam.lambda = !uses_lambda          ? ring.zero()
                 : c.lambda == "symbolic" ? ring.lambda_param()
                                          : ring.rational(parse_rational(c.lambda));
    fam.mu = !uses_mu             ? ring.zero()
             : c.mu == "symbolic" ? ring.mu_param()
                                  : ring.rational(parse_rational(c.mu));
    return fam;
}

// Whole-run result: exit status plus both report bodies.  Text lines are
// deterministic for a fixed config and seed; timing never enters them.
struct CommandResult {
    int status = 0;
    std::vector<std::string> lines;
    json doc;
};

struct TrialOutcome {
    bool ok = true;
    std::vector<std::string> lines;
    json doc;
};

inline std::string modular_point_display(const ModularRing& ring) {
    std::string s = "zeta=(";
    for (int i = 0; i < 5; ++i) s += (i ? "," : "") + std::to_string(ring.coordinates()[static_cast<std::size_t>(i)]);
    s += ") lambda=" + std::to_string(ring.lambda_value()) + " mu=" + std::to_string(ring.mu_value());
    return s;
}

inline json modular_point_json(const ModularRing& ring) {
    json j;
    j["zeta"] = ring.coordinates();
    j["lambda"] = ring.lambda_value();
    j["mu"] = ring.mu_value();
    return j;
}

// Samples the trial points sequentially (so a seed pins them), then runs the
// per-point work in parallel and aggregates back in trial order.
template <class Fn>
std::vector<TrialOutcome> run_modular_trials(const RunConfig& c, Fn&& body) {
    std::optional<std::array<std::uint64_t, 5>> fixed_zeta;
    if (auto z = parse_zeta_list(c.zeta)) {
        fixed_zeta.emplace();
        for (int i = 0; i < 5; ++i)
            (*fixed_zeta)[static_cast<std::size_t>(i)] = fp_from_rational((*z)[static_cast<std::size_t>(i)], c.prime).v;
    }
    std::optional<std::uint64_t> lam, mu;
    if (c.lambda != "symbolic") lam = fp_from_rational(parse_rational(c.lambda), c.prime).v;
    if (c.mu != "symbolic") mu = fp_from_rational(parse_rational(c.mu), c.prime).v;

    std::mt19937_64 rng(c.seed);
    std::vector<ModularRing> rings;
    rings.reserve(static_cast<std::size_t>(c.trials));
    for (int i = 0; i < c.trials; ++i) rings.push_back(ModularRing::sample(c.prime, rng, fixed_zeta, lam, mu));

    std::vector<std::future<TrialOutcome>> futures;
    futures.reserve(rings.size());
    for (std::size_t i = 0; i < rings.size(); ++i)
        futures.push_back(std::async(std::launch::async, [&rings, &body, i] { return body(rings[i], static_cast<int>(i)); }));
    std::vector<TrialOutcome> out;
    out.reserve(futures.size());
    for (auto& f : futures) out.push_back(f.get());
    return out;
}

template <class R>
json residual_terms_json(const R& ring, const Element<typename R::Scalar>& residual, std::size_t limit) {
    json arr = json::array();
    auto lines = element_lines(residual);
    if (residual.is_zero()) return arr;
    std::vector<Mask> order;
    for (const auto& [m, c] : residual.terms()) order.push_back(m);
    std::sort(order.begin(), order.end(), monomial_render_less);
    for (std::size_t i = 0; i < order.size() && i < limit; ++i) {
        json t;
        t["monomial"] = monomial_label(order[i]);
        t["coefficient"] = to_display(coefficient_of(ring, residual, order[i]));
        arr.push_back(t);
    }
    return arr;
}

template <class R>
void append_residual_report(const R& ring, const PentagonReport<typename R::Scalar>& rep, CommandResult& res,
                            const std::string& prefix, json& slot) {
    res.lines.push_back(prefix + "lhs monomials: " + std::to_string(rep.lhs.term_count()));
    res.lines.push_back(prefix + "rhs monomials: " + std::to_string(rep.rhs.term_count()));
    res.lines.push_back(prefix + "residual monomials: " + std::to_string(rep.residual.term_count()));
    slot["lhs_monomials"] = rep.lhs.term_count();
    slot["rhs_monomials"] = rep.rhs.term_count();
    slot["residual_monomials"] = rep.residual.term_count();
    slot["verified"] = rep.zero;
    if (!rep.zero) {
        res.lines.push_back(prefix + "first residual terms:");
        auto lines = element_lines(rep.residual);
        for (std::size_t i = 0; i < lines.size() && i < 10; ++i) res.lines.push_back(prefix + "  " + lines[i]);
        slot["residual_terms"] = residual_terms_json(ring, rep.residual, 10);
    }
}

inline CommandResult cmd_verify(const RunConfig& c) {
    CommandResult res;
    res.doc["result"] = json::object();
    json& out = res.doc["result"];
    res.lines.push_back("verify weight " + std::string(weight_kind_name(c.weight)) + ", mode " + c.mode);
    if (c.mode == "symbolic") {
        SymbolicRing ring = symbolic_ring(c);
        auto fam = symbolic_family(ring, c);
        auto rep = pentagon_residual(ring, fam);
        append_residual_report(ring, rep, res, "", out);
        if (c.weight == WeightKind::composite && c.lambda == "symbolic" && c.mu == "symbolic") {
            bool div = divisible_by_lambda_mu(rep.residual);
            res.lines.push_back(std::string("residual coefficients divisible by lam*mu: ") + (div ? "yes" : "no"));
            out["divisible_by_lambda_mu"] = div;
        }
        res.status = rep.zero ? 0 : 1;
        res.lines.push_back(res.status == 0 ? "verified: identity holds" : "verified: NO, residual is nonzero");
    } else {
        auto outcomes = run_modular_trials(c, [&](const ModularRing& ring, int index) {
            TrialOutcome t;
            auto rep = pentagon_residual(ring, make_family(ring, c.weight));
            t.ok = rep.zero;
            t.lines.push_back("trial " + std::to_string(index) + ": " + modular_point_display(ring) +
                              " residual monomials: " + std::to_string(rep.residual.term_count()));
            t.doc = modular_point_json(ring);
            t.doc["residual_monomials"] = rep.residual.term_count();
            t.doc["verified"] = rep.zero;
            return t;
        });
        int passed = 0;
        json arr = json::array();
        for (const auto& t : outcomes) {
            passed += t.ok ? 1 : 0;
            for (const auto& l : t.lines) res.lines.push_back(l);
            arr.push_back(t.doc);
        }
        out["prime"] = c.prime;
        out["trials"] = arr;
        out["passed"] = passed;
        out["verified"] = passed == c.trials;
        res.lines.push_back("trials passed: " + std::to_string(passed) + "/" + std::to_string(c.trials));
        res.status = passed == c.trials ? 0 : 1;
        res.lines.push_back(res.status == 0 ? "verified: identity holds at all sampled points"
                                            : "verified: NO, some sampled point fails");
    }
    return res;
}

inline std::vector<Side> requested_sides(const RunConfig& c) {
    if (c.both) return {Side::lhs, Side::rhs};
    if (c.side == "lhs") return {Side::lhs};
    if (c.side == "rhs") return {Side::rhs};
    throw ConfigError("--side must be lhs or rhs");
}

inline const char* side_name(Side s) { return s == Side::lhs ? "lhs" : "rhs"; }

inline Mask parse_coeff_monomial(const RunConfig& c, const std::vector<Side>& sides) {
    if (c.monomial.empty()) throw ConfigError("coeff needs --monomial (comma-separated face triples)");
    Mask m;
    try {
        m = parse_face_monomial(c.monomial);
    } catch (const std::exception& e) {
        throw ConfigError(std::string("bad --monomial: ") + e.what());
    }
    for (Side s : sides)
        if ((m & side_inner_mask(s)) != 0)
            throw ConfigError(std::string("monomial uses a face integrated out on the ") + side_name(s));
    return m;
}

inline CommandResult cmd_coeff(const RunConfig& c) {
    CommandResult res;
    res.doc["result"] = json::object();
    json& out = res.doc["result"];
    std::vector<Side> sides = requested_sides(c);
    Mask m = parse_coeff_monomial(c, sides);
    out["monomial"] = monomial_label(m);
    res.lines.push_back("coeff of " + monomial_label(m) + " in weight " + weight_kind_name(c.weight) + " pentagon");
    if (c.mode == "symbolic") {
        SymbolicRing ring = symbolic_ring(c);
        auto fam = symbolic_family(ring, c);
        std::vector<Scalar> vals;
        for (Side s : sides) {
            Scalar v = coefficient_of(ring, pentagon_side(ring, fam, s), m);
            vals.push_back(v);
            res.lines.push_back(std::string(side_name(s)) + ": " + to_display(v));
            out[side_name(s)] = to_display(v);
        }
        if (c.both) {
            bool equal = vals[0] == vals[1];
            res.lines.push_back(std::string("equal: ") + (equal ? "yes" : "no"));
            out["equal"] = equal;
            res.status = equal ? 0 : 1;
        }
    } else {
        auto outcomes = run_modular_trials(c, [&](const ModularRing& ring, int index) {
            TrialOutcome t;
            t.doc = modular_point_json(ring);
            auto fam = make_family(ring, c.weight);
            std::string line = "trial " + std::to_string(index) + ": " + modular_point_display(ring);
            std::vector<Fp> vals;
            for (Side s : sides) {
                Fp v = coefficient_of(ring, pentagon_side(ring, fam, s), m);
                vals.push_back(v);
                line += std::string(" ") + side_name(s) + "=" + v.str();
                t.doc[side_name(s)] = v.v;
            }
            if (sides.size() == 2) {
                t.ok = vals[0] == vals[1];
                line += std::string(" equal=") + (t.ok ? "yes" : "no");
                t.doc["equal"] = t.ok;
            }
            t.lines.push_back(line);
            return t;
        });
        json arr = json::array();
        bool all_ok = true;
        for (const auto& t : outcomes) {
            all_ok = all_ok && t.ok;
            for (const auto& l : t.lines) res.lines.push_back(l);
            arr.push_back(t.doc);
        }
        out["trials"] = arr;
        if (c.both) {
            out["equal"] = all_ok;
            res.lines.push_back(std::string("equal at all sampled points: ") + (all_ok ? "yes" : "no"));
            res.status = all_ok ? 0 : 1;
        }
    }
    return res;
}

inline CommandResult cmd_show(const RunConfig& c) {
    if (c.mode != "symbolic") throw ConfigError("show renders symbolically; drop --mode modp");
    CommandResult res;
    res.doc["result"] = json::object();
    json& out = res.doc["result"];
    SymbolicRing ring = symbolic_ring(c);
    Tetra tet = Tetra::parse(c.tet);
    auto emit_element = [&](const Element<Scalar>& e) {
        json terms = json::array();
        for (const auto& line : element_lines(e)) res.lines.push_back("  " + line);
        std::vector<Mask> order;
        for (const auto& [m, coeff] : e.terms()) order.push_back(m);
        std::sort(order.begin(), order.end(), monomial_render_less);
        for (Mask m : order) {
            json t;
            t["monomial"] = monomial_label(m);
            t["coefficient"] = to_display(e.terms().at(m));
            terms.push_back(t);
        }
        out["terms"] = terms;
    };
    auto emit_matrix = [&](const FormMatrix<Scalar>& m) {
        for (const auto& line : matrix_lines(m)) res.lines.push_back("  " + line);
        json rows = json::array(), cols = json::array(), entries = json::array();
        for (int r : m.rows) rows.push_back(generator_label(r));
        for (int f : m.cols) cols.push_back(generator_label(f));
        for (const auto& row : m.entry) {
            json jr = json::array();
            for (const Scalar& x : row) jr.push_back(to_display(x));
            entries.push_back(jr);
        }
        out["rows"] = rows;
        out["cols"] = cols;
        out["entries"] = entries;
    };
    if (c.object == "weight") {
        auto fam = symbolic_family(ring, c);
        res.lines.push_back("weight " + std::string(weight_kind_name(c.weight)) + " on " + tet.label() + ":");
        emit_element(make_weight(ring, fam, tet));
    } else if (c.object == "matrix-A") {
        res.lines.push_back("form matrix on " + tet.label() + ":");
        emit_matrix(tetra_form_matrix(ring, tet));
    } else if (c.object == "matrix-lhs" || c.object == "matrix-rhs") {
        Side s = c.object == "matrix-lhs" ? Side::lhs : Side::rhs;
        res.lines.push_back("stacked form matrix, " + std::string(side_name(s)) + ":");
        emit_matrix(pentagon_side_matrix(ring, s));
    } else if (c.object == "form") {
        auto fam = symbolic_family(ring, c);
        res.lines.push_back("exponent form for weight " + std::string(weight_kind_name(c.weight)) + " on " +
                            tet.label() + ":");
        emit_element(form_for_weight(ring, c.weight, tet, fam.lambda, fam.mu));
    } else {
        throw ConfigError("show needs an object: weight, matrix-A, matrix-lhs, matrix-rhs or form");
    }
    out["object"] = c.object;
    return res;
}

// All Gaussian-route identities for one ring: each tetrahedron weight from
// its exponent form, both pentagon sides from the stacked forms, and the
// exhaustive minor route for the base weight's 20 outer monomials per side.
template <class R>
TrialOutcome crosscheck_one(const R& ring, const WeightFamily<typename R::Scalar>& fam, const std::string& prefix) {
    TrialOutcome t;
    t.doc = json::object();
    for (int i = 0; i < kNumTets; ++i) {
        Tetra tet(tet_vertices(i));
        bool ok = integrate_out_aux(ring, form_for_weight(ring, fam.kind, tet, fam.lambda, fam.mu), tet) ==
                  make_weight(ring, fam, tet);
        t.ok = t.ok && ok;
        t.lines.push_back(prefix + "representation " + tet.label() + ": " + (ok ? "ok" : "FAIL"));
        t.doc["representation"][tet.label()] = ok;
    }
    for (Side s : {Side::lhs, Side::rhs}) {
        bool ok = pentagon_side_via_forms(ring, fam, s) == pentagon_side(ring, fam, s);
        t.ok = t.ok && ok;
        t.lines.push_back(prefix + "side " + side_name(s) + " via forms: " + (ok ? "ok" : "FAIL"));
        t.doc["side_via_forms"][side_name(s)] = ok;
    }
    auto base = make_family(ring, WeightKind::f);
    for (Side s : {Side::lhs, Side::rhs}) {
        auto rule = make_minor_rule(ring, s);
        auto direct = pentagon_side(ring, base, s);
        int agree = 0, total = 0;
        std::vector<int> outer = mask_generators(outer_face_mask());
        for (std::size_t i = 0; i < outer.size(); ++i)
            for (std::size_t j = i + 1; j < outer.size(); ++j)
                for (std::size_t k = j + 1; k < outer.size(); ++k) {
                    Mask m = mask_bit(outer[i]) | mask_bit(outer[j]) | mask_bit(outer[k]);
                    ++total;
                    if (coefficient_via_minor(ring, rule, m) == coefficient_of(ring, direct, m)) ++agree;
                }
        t.ok = t.ok && agree == total;
        t.lines.push_back(prefix + "minor rule (base weight) " + side_name(s) + ": " + std::to_string(agree) + "/" +
                          std::to_string(total) + " sigma=" + std::to_string(rule.sigma));
        t.doc["minor_rule"][side_name(s)] = {{"agree", agree}, {"total", total}, {"sigma", rule.sigma}};
    }
    return t;
}

inline CommandResult cmd_crosscheck(const RunConfig& c) {
    if (c.weight == WeightKind::composite)
        throw ConfigError("composite weight has no exponent-form representation to crosscheck");
    CommandResult res;
    res.doc["result"] = json::object();
    json& out = res.doc["result"];
    res.lines.push_back("crosscheck weight " + std::string(weight_kind_name(c.weight)) + ", mode " + c.mode);
    bool all_ok = true;
    if (c.mode == "symbolic") {
        SymbolicRing ring = symbolic_ring(c);
        auto t = crosscheck_one(ring, symbolic_family(ring, c), "");
        all_ok = t.ok;
        for (const auto& l : t.lines) res.lines.push_back(l);
        out = t.doc;
    } else {
        auto outcomes = run_modular_trials(c, [&](const ModularRing& ring, int index) {
            auto t = crosscheck_one(ring, make_family(ring, c.weight), "trial " + std::to_string(index) + ": ");
            json d = modular_point_json(ring);
            d["checks"] = t.doc;
            d["ok"] = t.ok;
            t.doc = d;
            return t;
        });
        json arr = json::array();
        for (const auto& t : outcomes) {
            all_ok = all_ok && t.ok;
            for (const auto& l : t.lines) res.lines.push_back(l);
            arr.push_back(t.doc);
        }
        out["prime"] = c.prime;
        out["trials"] = arr;
    }
    out["verified"] = all_ok;
    res.lines.push_back(all_ok ? "crosscheck: all identities hold" : "crosscheck: FAILURES above");
    res.status = all_ok ? 0 : 1;
    return res;
}

inline json config_echo(const RunConfig& c) {
    json j;
    j["command"] = c.command;
    j["weight"] = weight_kind_name(c.weight);
    j["mode"] = c.mode;
    j["lambda"] = c.lambda;
    j["mu"] = c.mu;
    j["output"] = c.output;
    if (!c.zeta.empty()) j["zeta"] = c.zeta;
    if (c.mode == "modp") {
        j["prime"] = c.prime;
        j["trials"] = c.trials;
        j["seed"] = c.seed;
    }
    if (c.command == "coeff") {
        j["monomial"] = c.monomial;
        if (c.both)
            j["both"] = true;
        else
            j["side"] = c.side;
    }
    if (c.command == "show") {
        j["object"] = c.object;
        j["tet"] = c.tet;
    }
    return j;
}

// Dispatch plus report emission.  Text reports go to `out` and are
// byte-identical for identical config and seed; timing goes to `err` in text
// mode and into a dedicated field in structured mode.
inline int run_command(const RunConfig& config, std::ostream& out, std::ostream& err) {
    auto start = std::chrono::steady_clock::now();
    CommandResult res;
    try {
        validate_config(config);
        if (config.command == "verify")
            res = cmd_verify(config);
        else if (config.command == "coeff")
            res = cmd_coeff(config);
        else if (config.command == "show")
            res = cmd_show(config);
        else if (config.command == "crosscheck")
            res = cmd_crosscheck(config);
        else
            throw ConfigError("unknown command '" + config.command + "'");
    } catch (const ConfigError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::domain_error& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
    auto ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    if (config.output == "structured") {
        res.doc["config"] = config_echo(config);
        res.doc["status"] = res.status;
        res.doc["timing_ms"] = ms;
        out << res.doc.dump(2) << "\n";
    } else {
        for (const auto& line : res.lines) out << line << "\n";
        err << "timing: " << ms << " ms\n";
    }
    return res.status;
}

}  // namespace berezin::cli
