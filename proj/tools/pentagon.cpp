// Command-line front end for the pentagon-identity verifier.

#include <iostream>
#include <string>

#include "CLI11.hpp"

#include "berezin/cli.hpp"

namespace {

struct Options {
    berezin::cli::RunConfig cfg;
    std::string weight = "f";
};

void add_common_flags(CLI::App* sub, Options& o) {
    sub->add_option("--weight", o.weight, "weight family: f, g, h or composite")
        ->check(CLI::IsMember({"f", "g", "h", "composite"}));
    sub->add_option("--mode", o.cfg.mode, "symbolic computation or sampled modular points")
        ->check(CLI::IsMember({"symbolic", "modp"}));
    sub->add_option("--prime", o.cfg.prime, "modulus for modp mode (odd prime >= 11)");
    sub->add_option("--trials", o.cfg.trials, "number of sampled points in modp mode");
    sub->add_option("--seed", o.cfg.seed, "seed for modp sampling");
    sub->add_option("--lambda", o.cfg.lambda, "quartic deformation parameter: 'symbolic' or a rational");
    sub->add_option("--mu", o.cfg.mu, "scalar deformation parameter: 'symbolic' or a rational");
    sub->add_option("--zeta", o.cfg.zeta, "five comma-separated rational vertex coordinates");
    sub->add_option("--output", o.cfg.output, "report format")->check(CLI::IsMember({"text", "structured"}));
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact verifier for the fermionic pentagon identity and its deformations"};
    app.require_subcommand(1);
    Options o;

    CLI::App* verify = app.add_subcommand("verify", "compute both pentagon sides and check the residual is zero");
    add_common_flags(verify, o);

    CLI::App* coeff = app.add_subcommand("coeff", "extract the coefficient of a face monomial on one or both sides");
    add_common_flags(coeff, o);
    coeff->add_option("--monomial", o.cfg.monomial, "comma-separated face triples, e.g. 124,125,135");
    coeff->add_option("--side", o.cfg.side, "which pentagon side")->check(CLI::IsMember({"lhs", "rhs"}));
    coeff->add_flag("--both", o.cfg.both, "print both sides and an equality verdict");

    CLI::App* show = app.add_subcommand("show", "render a weight, form matrix or exponent form");
    add_common_flags(show, o);
    show->add_option("object", o.cfg.object, "weight | matrix-A | matrix-lhs | matrix-rhs | form")->required();
    show->add_option("--tet", o.cfg.tet, "tetrahedron vertices, e.g. 1235");

    CLI::App* crosscheck =
        app.add_subcommand("crosscheck", "verify the exponent-form representations and the minor rule");
    add_common_flags(crosscheck, o);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    for (CLI::App* sub : {verify, coeff, show, crosscheck})
        if (sub->parsed()) o.cfg.command = sub->get_name();
    o.cfg.weight = berezin::cli::parse_weight_name(o.weight);
    return berezin::cli::run_command(o.cfg, std::cout, std::cerr);
}
