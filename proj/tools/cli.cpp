#include "cli.hpp"

#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include <CLI11.hpp>

#include "stabline/io.hpp"
#include "stabline/oracle.hpp"
#include "stabline/svg.hpp"

namespace stabline::cli {

namespace {

struct IoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string read_input(const std::string& path, std::istream& in) {
    if (path.empty() || path == "-") {
        return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
    }
    std::ifstream file(path, std::ios::binary);
    if (!file) {
        throw IoError("cannot open input file " + path);
    }
    return {std::istreambuf_iterator<char>(file), std::istreambuf_iterator<char>()};
}

void write_output(const std::string& path, const std::string& text, std::ostream& out) {
    if (path.empty() || path == "-") {
        out << text;
        return;
    }
    std::ofstream file(path, std::ios::binary);
    if (!file || !(file << text)) {
        throw IoError("cannot write output file " + path);
    }
}

void emit(const ResultDocument& result, const InstanceDocument& doc, const std::string& format,
          std::ostream& out) {
    out << (format == "json" ? result_to_json(result) : result_to_text(result, doc.name));
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
    CLI::App app{"Common transversals of parallel segments, with exact rational arithmetic", "stabline"};
    app.require_subcommand(1);

    std::string input;
    std::string format = "json";
    app.add_option("-i,--input", input, "instance file (default: stdin)");
    app.add_option("-f,--format", format, "output format")->check(CLI::IsMember({"json", "text"}));

    auto* check = app.add_subcommand("check", "existence and classification of transversals");
    auto* select = app.add_subcommand("select", "compute the selected transversals s1, s2, s3");
    std::string algorithm = "all";
    select->add_option("-a,--algorithm", algorithm, "selector")->check(CLI::IsMember({"s1", "s2", "s3", "all"}));
    auto* dual = app.add_subcommand("dual", "feasibility polygon of all transversals and its area");
    auto* render = app.add_subcommand("render", "SVG of the primal scene or the dual polygon");
    std::string mode;
    std::string out_path;
    render->add_option("-m,--mode", mode, "primal or dual")->required()->check(CLI::IsMember({"primal", "dual"}));
    render->add_option("-o,--out", out_path, "SVG file (default: stdout)");
    auto* oracle = app.add_subcommand("oracle", "cross-check results against independent oracles");
    std::string resolution_text = "1/400";
    oracle->add_option("-q,--grid-resolution", resolution_text, "grid spacing for the centroid oracle");
    for (auto* sub : {check, select, dual, render, oracle}) {
        sub->fallthrough();
    }

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kSuccess : kValidationError;
    }

    try {
        const InstanceDocument doc = parse_instance(read_input(input, in));

        if (check->parsed()) {
            emit(run_report(doc, {.extremal_lines = true, .s1 = false, .s2 = false, .s3 = false, .polygon = false}),
                 doc, format, out);
        } else if (select->parsed()) {
            const bool all = algorithm == "all";
            emit(run_report(doc, {.extremal_lines = false,
                                  .s1 = all || algorithm == "s1",
                                  .s2 = all || algorithm == "s2",
                                  .s3 = all || algorithm == "s3",
                                  .polygon = false}),
                 doc, format, out);
        } else if (dual->parsed()) {
            emit(run_report(doc, {.extremal_lines = false, .s1 = false, .s2 = false, .s3 = false, .polygon = true}),
                 doc, format, out);
        } else if (render->parsed()) {
            const RenderMode render_mode = mode == "primal" ? RenderMode::Primal : RenderMode::Dual;
            write_output(out_path, render_svg(doc, run_report(doc), render_mode), out);
        } else if (oracle->parsed()) {
            Rational resolution;
            try {
                resolution = Rational::parse(resolution_text);
            } catch (const std::invalid_argument& e) {
                throw ValidationError(ValidationErrorKind::MalformedRational, e.what());
            }
            if (resolution.sign() <= 0) {
                throw ValidationError(ValidationErrorKind::MalformedRational, "grid resolution must be positive");
            }
            const OracleReport report = oracle_check(doc, resolution);
            out << (format == "json" ? oracle_report_to_json(report) : oracle_report_to_text(report));
        }
    } catch (const ValidationError& e) {
        err << "error: " << e.what() << "\n";
        return kValidationError;
    } catch (const OracleMismatch& e) {
        out << (format == "json" ? oracle_report_to_json(e.report()) : oracle_report_to_text(e.report()));
        err << "error: " << e.what() << "\n";
        return kOracleMismatch;
    } catch (const IoError& e) {
        err << "error: " << e.what() << "\n";
        return kIoError;
    }
    return kSuccess;
}

}  // namespace stabline::cli
