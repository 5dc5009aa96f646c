#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "gradealg/cli.hpp"

namespace cli = gradealg::cli;

namespace {

std::string describe(cli::Command c) {
    switch (c) {
        case cli::Command::check_iso: return "decide whether A and gr_I(A) are isomorphic";
        case cli::Command::presentation: return "presentations of the Rees algebra and gr_I(A)";
        case cli::Command::hilbert: return "bigraded Hilbert function of gr_I(A)";
        case cli::Command::cohomology: return "local cohomology of A or of the Rees algebra R";
        case cli::Command::gencm: return "generalized Cohen-Macaulay test for R";
        case cli::Command::dim: return "dimension, depth and a-invariant";
    }
    return "";
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Associated graded rings, Rees algebras and Stanley-Reisner local cohomology"};
    app.require_subcommand(1, 1);

    std::string input, json_out, field, window, module = "A";
    bool allow_linear = false;

    for (const auto& [name, command] : cli::command_table()) {
        auto* sub = app.add_subcommand(name, describe(command));
        sub->add_option("--input", input, "problem description (JSON)")->required()->check(CLI::ExistingFile);
        sub->add_option("--json", json_out, "write the JSON report here ('-' for stdout)");
        sub->add_option("--field", field, "Q or GFp, overrides the input file");
        sub->add_option("--window", window, "degree window lo:hi (use --window=lo:hi for negative lo)");
        sub->add_flag("--allow-linear", allow_linear, "accept J containing linear forms");
        if (command == cli::Command::cohomology)
            sub->add_option("--module", module, "A or R")->check(CLI::IsMember({"A", "R"}));
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? cli::exit_ok : cli::exit_input;
    }

    auto command = *cli::parse_command(app.get_subcommands().front()->get_name());
    cli::Options opts;
    opts.allow_linear = allow_linear;
    opts.module = module == "R" ? cli::Module::R : cli::Module::A;
    if (!field.empty()) opts.field = field;

    cli::Report report;
    try {
        if (!window.empty()) opts.window = cli::parse_window(window);
        report = cli::run_file(command, input, opts);
    } catch (const gradealg::InputError& e) {
        report = cli::error_report(command, "input", e.what(), cli::exit_input);
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return cli::exit_input;
    }

    if (report.exit_code == cli::exit_input || report.exit_code == cli::exit_limit) std::cerr << report.text;
    else if (json_out != "-") std::cout << report.text;

    if (json_out == "-") {
        std::cout << cli::dump(report.body);
    } else if (!json_out.empty()) {
        std::ofstream out(json_out, std::ios::binary);
        if (!out) {
            std::cerr << "error: cannot write " << json_out << "\n";
            return cli::exit_input;
        }
        out << cli::dump(report.body);
    }
    return report.exit_code;
}
