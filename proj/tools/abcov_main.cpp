#include <CLI11.hpp>
#include <iostream>

#include "abcov/reports.hpp"

namespace {

void emit(const abcov::RunReport& report, bool text) {
    if (text) {
        const auto& doc = report.doc;
        std::cout << doc.at("command").get<std::string>() << ": " << (report.ok ? "ok" : "FAILED") << "\n";
        for (const auto& fx : doc.at("fixtures"))
            std::cout << "  [" << (fx.at("pass").get<bool>() ? "pass" : "FAIL") << "] "
                      << fx.at("name").get<std::string>() << "\n";
        std::cout << doc.at("results").dump(2) << "\n";
    } else {
        std::cout << report.doc.dump(2) << "\n";
    }
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact abelian-cover calculator"};
    app.require_subcommand(1);

    bool text = false;
    bool fail_fast = false;
    app.add_flag("--text", text, "human-readable summary instead of the json report");
    app.add_flag("--json,!--no-json", "json report (default)");
    app.add_flag("--fail-fast", fail_fast, "stop at the first failing fixture comparison");

    std::string data = abcov::default_data_dir();

    auto* inv = app.add_subcommand("invariants", "surface invariants of a branched cover config");
    inv->fallthrough();
    std::string inv_config = data + "/kulikov.json";
    inv->add_option("--config", inv_config, "cover config file");

    auto* tables = app.add_subcommand("tables", "eigensheaf tables with golden fixture comparison");
    tables->fallthrough();
    std::string tab_config = data + "/kulikov.json";
    std::string which = "tangent";
    std::string fixtures;
    tables->add_option("--config", tab_config, "cover config file");
    tables->add_option("--which", which, "tangent | bicanonical")->check(CLI::IsMember({"tangent", "bicanonical"}));
    tables->add_option("--fixtures", fixtures, "fixture file (defaults to the bundled one)");

    auto* hom = app.add_subcommand("homology", "abelianisation of the affine group or an index-3 subgroup");
    hom->fallthrough();
    std::string target = "gamma";
    hom->add_option("--target", target, "gamma | sigma1 | sigma2 | sigma3")
        ->check(CLI::IsMember({"gamma", "sigma1", "sigma2", "sigma3"}));

    auto* bloch = app.add_subcommand("bloch", "group-algebra ideal membership certificate");
    bloch->fallthrough();
    std::string mode = "full";
    std::vector<std::string> custom;
    bloch->add_option("--mode", mode, "full | without-extra | custom")
        ->check(CLI::IsMember({"full", "without-extra", "custom"}));
    bloch->add_option("--custom", custom, "generator triple \"a,b,c\" in surface syntax (repeatable)");

    auto* free_action = app.add_subcommand("free-action", "affine relation suite and fixed-point census");
    free_action->fallthrough();

    CLI11_PARSE(app, argc, argv);

    try {
        abcov::RunReport report;
        if (inv->parsed()) {
            report = abcov::cmd_invariants(inv_config);
        } else if (tables->parsed()) {
            if (fixtures.empty()) fixtures = data + "/fixtures/table_" + which + ".json";
            report = abcov::cmd_tables(tab_config, which, fixtures, fail_fast);
        } else if (hom->parsed()) {
            report = abcov::cmd_homology(target);
        } else if (bloch->parsed()) {
            report = abcov::cmd_bloch(custom.empty() ? mode : "custom", custom);
        } else if (free_action->parsed()) {
            report = abcov::cmd_free_action();
        }
        emit(report, text);
        return report.ok ? 0 : 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
