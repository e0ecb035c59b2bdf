#include "CLI11.hpp"

#include "commands.hpp"
#include "output_record.hpp"

#include <iostream>
#include <string>

namespace {

struct Cli {
    hktool::Options opts;
    std::string cls = "r";
    std::string fn = "t";
    std::string phases = "full";
    std::string format = "table";
};

void add_format(CLI::App* sub, Cli& c) {
    sub->add_option("--format", c.format, "output format")
        ->check(CLI::IsMember({"table", "json", "csv"}))
        ->capture_default_str();
}

void add_class(CLI::App* sub, Cli& c, bool required) {
    auto* opt = sub->add_option("--class", c.cls, "function class: r|star|convex")
                    ->check(CLI::IsMember({"r", "star", "convex"}));
    if (required)
        opt->required();
    else
        opt->capture_default_str();
}

void add_functional(CLI::App* sub, Cli& c) {
    sub->add_option("--functional", c.fn, "coefficient functional: t|fs|h22|h31")
        ->check(CLI::IsMember({"t", "fs", "h22", "h31"}))
        ->capture_default_str();
}

void add_search_flags(CLI::App* sub, Cli& c, int default_grid) {
    sub->add_option("--model", c.opts.model, "parametrization: lz|herglotz (default picked by functional)")
        ->check(CLI::IsMember({"lz", "herglotz"}));
    sub->add_option("--phases", c.phases, "lz phase handling: full|real")
        ->check(CLI::IsMember({"full", "real"}))
        ->capture_default_str();
    sub->add_option("--atoms", c.opts.atoms, "atom count for the herglotz model")
        ->check(CLI::Range(1, 16))
        ->capture_default_str();
    c.opts.grid = default_grid;
    sub->add_option("--grid", c.opts.grid,
                    default_grid == 0 ? "grid points per axis (0 = dimension-aware automatic)"
                                      : "scan resolution per axis")
        ->check(CLI::Range(0, 1 << 30))
        ->capture_default_str();
    sub->add_option("--restarts", c.opts.restarts, "refinement starts kept per nesting depth")
        ->check(CLI::Range(0, 4096))
        ->capture_default_str();
    sub->add_option("--seed", c.opts.seed, "seed for the extra random starts")->capture_default_str();
    sub->add_option("--tol", c.opts.tol, "refinement step floor / verdict tolerance")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
}

void resolve(Cli& c) {
    c.opts.cls = *hankelkit::parse_class(c.cls);
    c.opts.fn = *hankelkit::parse_functional(c.fn);
    c.opts.full_phases = c.phases == "full";
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"sharp-bound verification and search for three classes of univalent functions"};
    app.require_subcommand(1);

    Cli vc, sc, ec, rc;

    CLI::App* verify = app.add_subcommand("verify", "check recorded bounds, witnesses, and direction claims");
    add_class(verify, vc, true);
    add_functional(verify, vc);
    add_search_flags(verify, vc, 0);  // 0 -> 2001 for the reduced scan, auto for embedded searches
    verify->add_option("--order", vc.opts.order, "expansion order for witnesses")
        ->check(CLI::Range(5, 64))
        ->capture_default_str();
    add_format(verify, vc);

    CLI::App* search = app.add_subcommand("search", "maximize a functional over a parametrized class");
    add_class(search, sc, false);
    add_functional(search, sc);
    add_search_flags(search, sc, 0);
    add_format(search, sc);

    CLI::App* extremal = app.add_subcommand("extremal", "expand an equality witness exactly");
    add_class(extremal, ec, true);
    extremal->add_option("--variant", ec.opts.variant, "witness formula: paper|derived")
        ->check(CLI::IsMember({"paper", "derived"}))
        ->capture_default_str();
    extremal->add_option("--order", ec.opts.order, "number of coefficients to expand")
        ->check(CLI::Range(5, 64))
        ->capture_default_str();
    add_format(extremal, ec);

    CLI::App* report = app.add_subcommand("report", "full ceiling audit with empirical maxima");
    report->add_option("--atoms", rc.opts.atoms, "atom count for the measure searches")
        ->check(CLI::Range(1, 16))
        ->capture_default_str();
    report->add_option("--grid", rc.opts.grid, "grid points per axis (0 = automatic)")
        ->check(CLI::Range(0, 1 << 30))
        ->capture_default_str();
    report->add_option("--restarts", rc.opts.restarts)->check(CLI::Range(0, 4096))->capture_default_str();
    report->add_option("--seed", rc.opts.seed)->capture_default_str();
    report->add_option("--tol", rc.opts.tol)->check(CLI::PositiveNumber)->capture_default_str();
    add_format(report, rc);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        hktool::CommandResult res;
        std::string format = "table";
        if (verify->parsed()) {
            resolve(vc);
            format = vc.format;
            res = hktool::cmd_verify(vc.opts);
        } else if (search->parsed()) {
            resolve(sc);
            format = sc.format;
            res = hktool::cmd_search(sc.opts);
        } else if (extremal->parsed()) {
            resolve(ec);
            format = ec.format;
            res = hktool::cmd_extremal(ec.opts);
        } else {
            format = rc.format;
            res = hktool::cmd_report(rc.opts);
        }
        std::cout << hktool::render(res.record, hktool::parse_format(format));
        return res.exit_code;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
