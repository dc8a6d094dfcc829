#include "mccgs/report.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>

namespace {

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw mccgs::error("cannot open '" + path + "'");
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::string& path, const std::string& text) {
    std::ofstream out(path);
    if (!out) throw mccgs::error("cannot write '" + path + "'");
    out << text;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Comprehensive Groebner system of a parametric polynomial ideal"};
    std::string problem_path, json_path, dot_path;
    mccgs::RunOptions opt;
    app.add_option("problem", problem_path, "problem file")->required();
    app.add_option("--mode", opt.mode, "pipeline: buildtree or mccgs")
        ->check(CLI::IsMember({"buildtree", "mccgs"}))
        ->capture_default_str();
    app.add_option("--json", json_path, "write the JSON report to this path");
    app.add_option("--dot", dot_path, "write the discussion tree in DOT format to this path");
    app.add_option("--genimage-bound", opt.genimage_bound,
                   "total-degree bound for the pre-image search")
        ->capture_default_str();
    app.add_option("--factor-degree-bound", opt.factor_degree_bound,
                   "degree bound for multivariate factorization")
        ->capture_default_str();
    app.add_option("--samples", opt.samples, "sampled points per segment for the sanity check")
        ->capture_default_str();
    app.add_option("--seed", opt.seed, "random seed for sampling")->capture_default_str();
    CLI11_PARSE(app, argc, argv);

    try {
        mccgs::ProblemFile pf = mccgs::parse_problem(read_file(problem_path));
        mccgs::ReportBundle bundle = mccgs::run_problem(pf, opt);
        std::cout << mccgs::emit_table(bundle);
        for (const auto& w : bundle.diagnostics.warnings) std::cerr << "WARN: " << w << "\n";
        for (const auto& v : bundle.diagnostics.violations) std::cerr << "WARN: " << v << "\n";
        if (!json_path.empty()) write_file(json_path, mccgs::emit_json(bundle));
        if (!dot_path.empty()) write_file(dot_path, mccgs::emit_dot(*bundle.tree, bundle.ring));
        bool warned =
            !bundle.diagnostics.warnings.empty() || !bundle.diagnostics.violations.empty();
        return warned ? 2 : 0;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
