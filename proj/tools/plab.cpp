#include "plab/cli.hpp"

#include <CLI11.hpp>

#include <iostream>

int main(int argc, char** argv)
{
    CLI::App app{"Exact jet, Spencer and Pfaffian computations on small PDE systems"};
    app.set_version_flag("--version", "plab 0.1");

    plab::cli::Invocation inv;
    unsigned order = 0, orders = 0, levels = 0;
    std::string point;
    bool json = false;

    std::string command_help = "one of:";
    for (const auto& c : plab::cli::commands())
        command_help += " " + c;
    app.add_option("command", inv.command, command_help)->required();
    app.add_option("files", inv.files, "input files (.pde, .pfs, .map)");
    auto* order_opt = app.add_option("--order", order, "symbol, Cartan or jet order");
    auto* orders_opt = app.add_option("--orders", orders, "number of orders past the system order");
    auto* point_opt = app.add_option("--point", point, "coordinate values, e.g. \"x=0,u=1,u[1]=1/2\"");
    auto* levels_opt = app.add_option("--levels", levels, "prolongation levels");
    app.add_option("--seed", inv.options.seed, "seed for every sampled choice")->default_val(0);
    app.add_flag("--json", json, "emit JSON instead of text");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }
    if (*order_opt)
        inv.options.order = order;
    if (*orders_opt)
        inv.options.orders = orders;
    if (*point_opt)
        inv.options.point = point;
    if (*levels_opt)
        inv.options.levels = levels;

    const plab::Report report = plab::cli::run(inv);
    std::cout << (json ? report.json() : report.text());
    if (!report.error.empty())
        std::cerr << "plab: " << report.error << "\n";
    return report.exit_status;
}
