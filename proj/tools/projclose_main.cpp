#include <cstdint>
#include <iostream>
#include <string>

#include "CLI11.hpp"

#include "projclose/errors.hpp"
#include "projclose/report.hpp"

using namespace projclose;

int main(int argc, char** argv) {
    CLI::App app{"Recursive cross-product closures of rays in the real projective plane"};
    app.require_subcommand(1);

    std::string basis_text;
    std::string quad_text;
    std::string output;
    std::string format = "json";
    int levels = 6;
    std::uint64_t max_points = 100000;
    std::uint64_t samples = 10000;
    std::uint64_t seed = 0;
    int threads = 0;
    bool approx_floats = false;
    bool timings = false;

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--levels", levels, "level / round cap (default 6)");
        sub->add_option("--max-points", max_points, "point budget (default 100000)");
        sub->add_option("--samples", samples,
                        "density sample size / axiom sampling budget (default 10000)");
        sub->add_option("--seed", seed, "axiom sampling seed");
        sub->add_option("--threads", threads, "worker threads, 0 = machine parallelism")
            ->envname("PROJCLOSE_THREADS");
        sub->add_option("--format", format, "json | csv")
            ->check(CLI::IsMember({"json", "csv"}));
        sub->add_option("--output", output,
                        "report path; the points CSV lands next to it");
        sub->add_flag("--approx-floats", approx_floats,
                      "approximate float coordinates by rationals (warns on stderr)");
        sub->add_flag("--timings", timings, "include per-level wall time in the trace");
    };
    auto add_basis = [&](CLI::App* sub) {
        sub->add_option("--basis", basis_text,
                        "three vectors \"x1,x2,x3;y1,y2,y3;z1,z2,z3\", rational entries")
            ->required();
    };

    CLI::App* closure =
        app.add_subcommand("closure", "grow the cross-product closure of a basis");
    add_basis(closure);
    add_common(closure);

    CLI::App* classify = app.add_subcommand("classify", "degenerate or dense, by exact dot products");
    add_basis(classify);
    add_common(classify);

    CLI::App* density =
        app.add_subcommand("density", "closure plus covering radius and separation per level");
    add_basis(density);
    add_common(density);

    CLI::App* verify =
        app.add_subcommand("verify", "check incidence axioms and ortho-closure on the closure");
    add_basis(verify);
    add_common(verify);

    CLI::App* moebius = app.add_subcommand("moebius", "grow a Moebius net from a quadrangle");
    moebius
        ->add_option("--quadrangle", quad_text, "four vectors, semicolon-separated")
        ->required();
    add_common(moebius);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    cli::RunConfig config;
    config.command = cli::parse_command(app.get_subcommands().front()->get_name());
    config.caps.max_level = levels;
    config.caps.max_points = max_points;
    config.samples = samples;
    config.seed = seed;
    config.threads = threads;
    config.output = output;
    config.format = format == "csv" ? cli::OutputFormat::csv : cli::OutputFormat::json;
    config.approx_floats = approx_floats;
    config.include_timings = timings;

    try {
        std::string warning;
        if (!basis_text.empty())
            config.basis = cli::parse_basis(basis_text, approx_floats, &warning);
        if (!quad_text.empty())
            config.quadrangle = cli::parse_quadrangle(quad_text, approx_floats, &warning);
        if (!warning.empty()) std::cerr << "warning: " << warning << "\n";
        return cli::run(config);
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
