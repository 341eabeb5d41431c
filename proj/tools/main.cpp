#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "shiftinv/errors.hpp"
#include "shiftinv/report.hpp"

namespace {

std::string read_input(const std::string& path) {
    if (path == "-") {
        std::ostringstream buffer;
        buffer << std::cin.rdbuf();
        return buffer.str();
    }
    std::ifstream file(path);
    if (!file) {
        throw shiftinv::ValidationError("cannot open input file \"" + path + "\"");
    }
    std::ostringstream buffer;
    buffer << file.rdbuf();
    return buffer.str();
}

std::vector<shiftinv::CircleRational> parse_support_list(const std::string& csv) {
    std::vector<shiftinv::CircleRational> out;
    std::istringstream in(csv);
    std::string token;
    while (std::getline(in, token, ',')) {
        token.erase(std::remove(token.begin(), token.end(), ' '), token.end());
        if (token.empty()) continue;
        out.push_back(shiftinv::CircleRational::parse(token));
    }
    return out;
}

struct CommonOptions {
    std::string input_path;
    std::string output_format = "json";
};

void add_common(CLI::App* sub, CommonOptions& options, bool input_required) {
    auto* input = sub->add_option("--input", options.input_path,
                                  "request document (JSON), \"-\" for stdin");
    if (input_required) input->required();
    sub->add_option("--output", options.output_format, "output format")
        ->check(CLI::IsMember({"json", "text"}))
        ->capture_default_str();
}

int emit(const shiftinv::AnalysisReport& report, const CommonOptions& options) {
    std::cout << (options.output_format == "text" ? report.to_text() : report.to_json_text());
    return report.precondition_failure ? 1 : 0;
}

shiftinv::AnalysisRequest load_request(const CommonOptions& options,
                                       shiftinv::Command expected) {
    const auto request = shiftinv::parse_request(read_input(options.input_path));
    if (request.command != expected) {
        throw shiftinv::ValidationError("document command \"" +
                                        shiftinv::command_name(request.command) +
                                        "\" does not match CLI subcommand \"" +
                                        shiftinv::command_name(expected) + "\"");
    }
    return request;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact shift-invariance analysis on finite abelian groups"};
    app.require_subcommand(1);

    CommonOptions analyze_opts;
    auto* analyze = app.add_subcommand(
        "analyze", "Lambda, invariance subgroup A, and verdicts for X and Y");
    add_common(analyze, analyze_opts, true);

    CommonOptions fixed_opts;
    bool oracle_flag = false;
    auto* fixed = app.add_subcommand(
        "fixed-points", "coset basis of all laws invariant under the shift Y");
    add_common(fixed, fixed_opts, true);
    fixed->add_flag("--oracle", oracle_flag,
                    "cross-check against the exact nullspace oracle (order <= 64)");

    CommonOptions independence_opts;
    auto* independence = app.add_subcommand(
        "independence", "exact factorization check of the joint law of (X+Y, Y)");
    add_common(independence, independence_opts, true);

    CommonOptions sample_opts;
    std::uint64_t sample_n = 0;
    std::uint64_t sample_seed = 0;
    auto* sample = app.add_subcommand("sample", "seeded Monte Carlo cross-check");
    add_common(sample, sample_opts, true);
    auto* n_opt = sample->add_option("--n", sample_n, "number of draws (>= 1)");
    auto* seed_opt = sample->add_option("--seed", sample_seed, "master seed");

    CommonOptions circle_opts;
    std::string support_csv;
    bool nonrational = false;
    auto* circle = app.add_subcommand(
        "circle", "classify the invariant laws for a rational random shift on [0,1)");
    add_common(circle, circle_opts, false);
    circle->add_option("--support", support_csv, "comma-separated rational support, e.g. \"1/4,1/6\"");
    circle->add_flag("--nonrational", nonrational,
                     "declare mass outside the rationals (or infinite rational support)");

    CLI11_PARSE(app, argc, argv);

    try {
        shiftinv::AnalysisRequest request;
        CommonOptions* options = nullptr;

        if (analyze->parsed()) {
            options = &analyze_opts;
            request = load_request(analyze_opts, shiftinv::Command::Analyze);
        } else if (fixed->parsed()) {
            options = &fixed_opts;
            request = load_request(fixed_opts, shiftinv::Command::FixedPoints);
            if (oracle_flag) request.run_oracle = true;
        } else if (independence->parsed()) {
            options = &independence_opts;
            request = load_request(independence_opts, shiftinv::Command::Independence);
        } else if (sample->parsed()) {
            options = &sample_opts;
            request = load_request(sample_opts, shiftinv::Command::Sample);
            if (n_opt->count() > 0) {
                if (sample_n == 0) {
                    throw shiftinv::ValidationError("sample: --n must be >= 1");
                }
                request.sample_count = sample_n;
            }
            if (seed_opt->count() > 0) {
                request.seed = sample_seed;
            }
        } else if (circle->parsed()) {
            options = &circle_opts;
            if (!circle_opts.input_path.empty()) {
                request = load_request(circle_opts, shiftinv::Command::Circle);
            } else {
                request.command = shiftinv::Command::Circle;
            }
            if (!support_csv.empty() || nonrational) {
                shiftinv::CircleInput input;
                input.support = parse_support_list(support_csv);
                input.has_nonrational_mass = nonrational;
                request.circle = input;
            }
        }

        const auto report = shiftinv::run(request);
        return emit(report, *options);
    } catch (const shiftinv::TheoremViolationError& e) {
        std::cerr << "theorem violation (implementation bug): " << e.what() << "\n";
        return 2;
    } catch (const shiftinv::PreconditionError& e) {
        std::cerr << "precondition failed: " << e.what() << "\n";
        return 1;
    } catch (const shiftinv::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
