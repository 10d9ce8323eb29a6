#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "tihany/graph6.hpp"
#include "tihany/sweep.hpp"

namespace {

nlohmann::json load_json(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot read " + path);
    return nlohmann::json::parse(in);
}

void write_text(const std::string& path, const std::string& text) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << text;
}

int cmd_gen(const std::string& family, std::uint64_t seed, int count, const std::string& dir) {
    for (const auto& inst : tihany::generate_family(family, seed, count))
        write_text(dir + "/" + inst.id + ".g6", tihany::graph6_encode(inst.graph) + "\n");
    return 0;
}

int cmd_sweep(const std::string& config_path, const std::string& out_path) {
    auto config = tihany::SweepConfig::from_json(load_json(config_path));
    tihany::SweepReport report = tihany::run_sweep(config);
    write_text(out_path, report.doc.dump(2) + "\n");
    return report.exit_code();
}

int cmd_hunt(const std::string& config_path, const std::string& bundle_path) {
    auto config = tihany::SweepConfig::from_json(load_json(config_path));
    tihany::HuntResult result = tihany::hunt(config);
    if (!result.counterexamples.empty())
        write_text(bundle_path, result.counterexamples.dump(2) + "\n");
    return result.exit_code;
}

int cmd_explain(const std::string& report_path, const std::string& id) {
    std::cout << tihany::explain(load_json(report_path), id);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"claw-free Tihany verification harness"};
    app.require_subcommand(1);

    std::string family, out_dir = ".", config_path, report_path, id;
    std::string report_out = "report.json", bundle_path = "counterexamples.json";
    std::uint64_t seed = 1;
    int count = 1;

    auto* gen = app.add_subcommand("gen", "generate a seeded family corpus as graph6 files");
    gen->add_option("--family", family, "family name")
        ->required()
        ->check(CLI::IsMember(tihany::family_names()));
    gen->add_option("--seed", seed, "seed");
    gen->add_option("--count", count, "instances to generate")->check(CLI::PositiveNumber);
    gen->add_option("--out", out_dir, "output directory");

    auto* sweep = app.add_subcommand("sweep", "run the Tihany sweep and write a JSON report");
    sweep->add_option("--config", config_path, "JSON config")->required();
    sweep->add_option("--out", report_out, "report path");

    auto* hunt = app.add_subcommand("hunt", "sweep plus exhaustive split partition checks");
    hunt->add_option("--config", config_path, "JSON config")->required();
    hunt->add_option("--out", bundle_path, "counterexample bundle path");

    auto* explain = app.add_subcommand("explain", "print the certificates of one instance");
    explain->add_option("--report", report_path, "report JSON")->required();
    explain->add_option("--id", id, "instance id")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    try {
        if (gen->parsed()) return cmd_gen(family, seed, count, out_dir);
        if (sweep->parsed()) return cmd_sweep(config_path, report_out);
        if (hunt->parsed()) return cmd_hunt(config_path, bundle_path);
        return cmd_explain(report_path, id);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
