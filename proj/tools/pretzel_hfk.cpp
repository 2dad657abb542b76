// pretzel-hfk: knot Floer homology of three-strand pretzel knots.
//
//   pretzel-hfk --pretzel -2,3,3 --format pretty
//   pretzel-hfk --verify --sweep a=1..3,b=1..3,c=1..3 --format json --out grid.json

#include "pretzel_hfk/report.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <map>

using namespace pretzel_hfk;

int main(int argc, char** argv) {
    CLI::App app{"Knot Floer homology of pretzel knots K(p1,p2,p3)"};
    app.set_version_flag("--version", "pretzel-hfk 1.0");

    std::string pretzel_text, sweep_text, out_path;
    FamilyChoice family = FamilyChoice::thm1;
    VariantChoice variant = VariantChoice::b;
    OracleChoice oracle = OracleChoice::both;
    OutputFormat format = OutputFormat::pretty;
    bool verify = false;
    unsigned threads = 0;

    auto* pretzel_opt = app.add_option("--pretzel", pretzel_text, "Twist parameters P1,P2,P3");
    auto* sweep_opt = app.add_option("--sweep", sweep_text, "Parameter grid a=L..U,b=L..U,c=L..U");
    pretzel_opt->excludes(sweep_opt);
    app.add_option("--family", family, "Families swept: thm1, thm2 or all")
        ->transform(CLI::CheckedTransformer(
            std::map<std::string, FamilyChoice>{{"thm1", FamilyChoice::thm1}, {"thm2", FamilyChoice::thm2}, {"all", FamilyChoice::all}},
            CLI::ignore_case))
        ->option_text("thm1|thm2|all");
    app.add_option("--variant", variant, "Marked-point variant: a, b or both")
        ->transform(CLI::CheckedTransformer(
            std::map<std::string, VariantChoice>{{"a", VariantChoice::a}, {"b", VariantChoice::b}, {"both", VariantChoice::both}},
            CLI::ignore_case))
        ->option_text("a|b|both");
    app.add_option("--oracle", oracle, "Alexander polynomial source: fox, statesum or both")
        ->transform(CLI::CheckedTransformer(
            std::map<std::string, OracleChoice>{{"fox", OracleChoice::fox}, {"statesum", OracleChoice::statesum}, {"both", OracleChoice::both}},
            CLI::ignore_case))
        ->option_text("fox|statesum|both");
    app.add_option("--format", format, "Output format: json, csv or pretty")
        ->transform(CLI::CheckedTransformer(
            std::map<std::string, OutputFormat>{{"json", OutputFormat::json}, {"csv", OutputFormat::csv}, {"pretty", OutputFormat::pretty}},
            CLI::ignore_case))
        ->option_text("json|csv|pretty");
    app.add_flag("--verify", verify, "Run the full check suite");
    app.add_option("--out", out_path, "Write output to this file instead of stdout");
    app.add_option("--threads", threads, "Sweep worker threads (0 = hardware concurrency)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? kExitOk : kExitUsage;
    }
    if (pretzel_text.empty() && sweep_text.empty()) {
        std::cerr << "error: one of --pretzel or --sweep is required\n" << app.help();
        return kExitUsage;
    }

    const RunOptions opt{variant, oracle, verify};
    std::vector<RunReport> reports;
    const bool sweep = !sweep_text.empty();
    try {
        if (sweep)
            reports = run_sweep(parse_sweep(sweep_text), family, opt, threads);
        else
            reports.push_back(run_single(parse_triple(pretzel_text), opt));
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    }

    std::string text;
    switch (format) {
    case OutputFormat::json: text = render_json(reports, sweep); break;
    case OutputFormat::csv: text = render_csv(reports); break;
    case OutputFormat::pretty: text = render_pretty(reports); break;
    }

    if (out_path.empty()) {
        std::cout << text;
    } else {
        std::ofstream out(out_path, std::ios::binary);
        if (!out || !(out << text)) {
            std::cerr << "error: cannot write " << out_path << '\n';
            return kExitUsage;
        }
    }

    const int rc = exit_code(reports);
    if (rc == kExitOutOfScope)
        std::cerr << "note: input outside the supported families\n";
    else if (rc == kExitVerificationFailed)
        std::cerr << "error: a mandatory check failed\n";
    return rc;
}
