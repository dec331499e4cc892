#include <iostream>

#include "CLI11.hpp"

#include "fone/cli.hpp"

int main(int argc, char** argv)
{
    using fone::cli::RunConfig;

    CLI::App app{"Delooping the field with one element: tables, checks and homology"};
    app.require_subcommand(1);

    RunConfig cfg;
    auto add_common = [&cfg](CLI::App* sub, bool with_object) {
        sub->add_option("--n", cfg.n, "number of deloopings")->check(CLI::Range(0, 8));
        sub->add_option("--k", cfg.k, "Gamma level <k>")->check(CLI::Range(0, 16));
        sub->add_option("--trunc-simplicial", cfg.k_max, "simplicial truncation K")
            ->check(CLI::Range(0, 8));
        sub->add_option("--trunc-gamma", cfg.t_max, "Gamma truncation T")->check(CLI::Range(0, 6));
        sub->add_option("--levels", cfg.levels, "diagonal level bound N")->check(CLI::Range(0, 12));
        sub->add_option("--format", cfg.format, "output format")
            ->check(CLI::IsMember({"human", "json"}));
        sub->add_option("--out", cfg.out, "write output to this file");
        if (with_object)
            sub->add_option("--object", cfg.object, "object whose homology is computed")
                ->check(CLI::IsMember({"sphere", "torus", "em"}));
    };

    auto* table = app.add_subcommand("table", "value sizes and non-degenerate census of B^n F1<k>");
    auto* verify = app.add_subcommand("verify", "run every check within the truncations");
    auto* homology = app.add_subcommand("homology", "reduced homology of a diagonal");
    auto* exp = app.add_subcommand("export", "tables, checks and homology as JSON");
    add_common(table, false);
    add_common(verify, false);
    add_common(homology, true);
    add_common(exp, false);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : fone::cli::usage_error;
    }

    for (auto* sub : {table, verify, homology, exp})
        if (sub->parsed())
            cfg.command = sub->get_name();
    if (cfg.command == "export")
        cfg.format = "json";

    fone::cli::CommandOutput result;
    try {
        result = fone::cli::dispatch(cfg);
    } catch (const std::exception& e) {
        std::cerr << "fone: " << e.what() << '\n';
        return fone::cli::check_failure;
    }
    (result.exit_code == fone::cli::usage_error ? std::cerr : std::cout) << result.text;
    return result.exit_code;
}
