#include <iostream>

#include "CLI11.hpp"
#include "cli/commands.hpp"

namespace {

void add_max_product(CLI::App* cmd, std::optional<std::int64_t>& target, std::int64_t default_value) {
    cmd->add_option("--max-product", target,
                    "Ceiling on the largest p*q (default " + std::to_string(default_value) + ")");
}

}  // namespace

int main(int argc, char** argv) {
    using namespace tkhf::cli;

    CLI::App app{"Heegaard Floer invariants of +1 and -1 surgeries on torus knots T(p,q)"};
    app.require_subcommand(1);

    ComputeOptions compute;
    auto* compute_cmd = app.add_subcommand("compute", "Full invariant report for one pair");
    compute_cmd->add_option("p", compute.p, "First generator")->required();
    compute_cmd->add_option("q", compute.q, "Second generator")->required();
    compute_cmd->add_option("--format", compute.format, "json|text")->capture_default_str();
    add_max_product(compute_cmd, compute.max_product, default_compute_max_product);

    TableOptions table;
    auto* table_cmd = app.add_subcommand("table", "One row per coprime pair 2 <= p < q, p <= P, q <= Q");
    table_cmd->add_option("p_max", table.p_max, "Bound P on p")->required();
    table_cmd->add_option("q_max", table.q_max, "Bound Q on q")->required();
    table_cmd->add_option("--columns", table.columns, "Comma-separated column names")->delimiter(',');
    table_cmd->add_option("--format", table.format, "csv|json")->capture_default_str();
    add_max_product(table_cmd, table.max_product, default_table_max_product);

    VerifyOptions verify;
    auto* verify_cmd = app.add_subcommand("verify", "Cross-formula verification sweeps");
    verify_cmd->add_option("p_max", verify.p_max, "Bound P on p")->required();
    verify_cmd->add_option("q_max", verify.q_max, "Bound Q on q")->required();
    verify_cmd->add_option("--suites", verify.suites, "Comma-separated suite names (default: all)")->delimiter(',');
    verify_cmd->add_option("--format", verify.format, "text|json")->capture_default_str();
    add_max_product(verify_cmd, verify.max_product, default_verify_max_product);

    DiagramOptions diagram;
    auto* diagram_cmd = app.add_subcommand("diagram", "Sawtooth corners of tau and the tower structure");
    diagram_cmd->add_option("p", diagram.p, "First generator")->required();
    diagram_cmd->add_option("q", diagram.q, "Second generator")->required();
    diagram_cmd->add_option("--which", diagram.which, "plus|minus|both")->capture_default_str();
    diagram_cmd->add_option("--format", diagram.format, "csv|dot")->capture_default_str();
    add_max_product(diagram_cmd, diagram.max_product, default_compute_max_product);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? exit_ok : exit_usage;
    }

    if (*compute_cmd) return run_compute(compute, std::cout, std::cerr);
    if (*table_cmd) return run_table(table, std::cout, std::cerr);
    if (*verify_cmd) return run_verify(verify, std::cout, std::cerr);
    return run_diagram(diagram, std::cout, std::cerr);
}
