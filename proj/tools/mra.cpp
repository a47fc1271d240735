// mra: command-line front end for the ranking multiresolution library.
#include "CLI11.hpp"

#include "mrarank/errors.hpp"
#include "mrarank/inference.hpp"
#include "mrarank/marginals.hpp"
#include "mrarank/regularization.hpp"
#include "mrarank/transform.hpp"
#include "mrarank/validation.hpp"

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

using namespace mrarank;

namespace {

enum ExitCode { kOk = 0, kGeneric = 1, kParse = 2, kDomain = 3, kResource = 4, kAudit = 5 };

struct IoError : Error {
    using Error::Error;
};

std::string read_input(const std::string& path) {
    if (path == "-") {
        std::ostringstream ss;
        ss << std::cin.rdbuf();
        return ss.str();
    }
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_output(const std::string& path, const std::string& text) {
    if (path.empty() || path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("cannot write '" + path + "'");
    out << text;
}

std::string number(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

unsigned resolve_workers(unsigned flag) {
    if (flag > 0) return flag;
    if (const char* env = std::getenv("MRA_WORKERS")) {
        char* end = nullptr;
        const unsigned long v = std::strtoul(env, &end, 10);
        if (end == env || *end != '\0' || v == 0) throw DomainError("MRA_WORKERS must be a positive integer");
        return static_cast<unsigned>(v);
    }
    return 1;
}

std::size_t largest_content(const RankingFunction& f) {
    std::size_t k = 2;
    for (const auto& [w, v] : f.entries()) k = std::max(k, w.size());
    return k;
}

std::string format_function(const RankingFunction& f, const Subset& a) {
    std::string out;
    for (const auto& w : enumerate_rankings(a)) out += format_word(w) + ' ' + number(f(w)) + '\n';
    return out;
}

struct Options {
    unsigned workers = 0;
    std::size_t k_max = kDefaultAlphaSize;

    std::string input;
    std::string output;
    std::string summary;
    std::string subset;
    std::string local;
    std::size_t h = 0;
    bool simplex = false;

    std::string model;
    std::string design;
    std::size_t n_obs = 0;
    std::uint64_t seed = 0;

    std::string suite;
    std::size_t n = 0;
};

int run_transform(const Options& o) {
    const Dataset d = parse_dataset_string(read_input(o.input));
    const auto f = d.histogram();
    const AlphaTable table(std::max(o.k_max, largest_content(f)));
    CoefficientFile file{fwt(f, table, nullptr, resolve_workers(o.workers)), table.k_max(), d.universe()};
    write_output(o.output, format_coefficients(file));
    return kOk;
}

int run_synth(const Options& o) {
    const CoefficientFile file = parse_coefficients(read_input(o.input));
    const Subset a = parse_subset(o.subset, 0);
    auto f = estimate_marginal(file.coefficients, a);
    if (o.simplex) f = project_to_simplex(f, a);
    write_output(o.output, format_function(f, a));
    return kOk;
}

int run_estimate(const Options& o) {
    const Dataset d = parse_dataset_string(read_input(o.input));
    EstimatorAccumulator acc;
    acc.add(d);
    const AlphaTable table(std::max(o.k_max, largest_content(acc.histogram())));
    CoefficientFile file{acc.finalize(table, nullptr, resolve_workers(o.workers)), table.k_max(), d.universe()};

    std::set<Subset> design;
    for (const auto& [a, count] : acc.subset_counts()) design.insert(a);
    const auto support = identifiable_support(ObservationDesign(design));
    std::ostringstream report;
    report << "observations " << acc.observations() << '\n';
    report << "stored " << acc.histogram().size() << '\n';
    report << "dof " << support.dof << '\n';
    for (const auto& [b, z] : acc.coverage()) report << "coverage " << format_subset(b) << ' ' << z << '\n';

    if (o.output.empty() || o.output == "-") {
        std::cout << format_coefficients(file);
        if (o.summary.empty()) std::cerr << report.str();
        else write_output(o.summary, report.str());
    } else {
        write_output(o.output, format_coefficients(file));
        write_output(o.summary, report.str());
    }
    return kOk;
}

int run_smooth(const Options& o) {
    CoefficientFile file = parse_coefficients(read_input(o.input));
    if (!o.local.empty()) {
        const Subset a = parse_subset(o.local, 0);
        file.coefficients = local_regularize(file.coefficients, a, o.h);
        file.universe = a;
    } else {
        file.coefficients = kernel_smooth(file.coefficients, o.h, file.universe);
    }
    write_output(o.output, format_coefficients(file));
    return kOk;
}

int run_marginal(const Options& o) {
    const Dataset d = parse_dataset_string(read_input(o.input));
    const Subset a = parse_subset(o.subset, 0);
    if (a.size() < 2) throw DomainError("marginal: the subset needs at least two items");
    const auto naive = naive_empirical_marginal(d, a);
    const auto based = marginal_based_estimator(d, a);
    std::string out = "ranking naive marginal_based\n";
    for (const auto& w : enumerate_rankings(a)) out += format_word(w) + ' ' + number(naive(w)) + ' ' + number(based(w)) + '\n';
    write_output(o.output, out);
    return kOk;
}

int run_gen(const Options& o) {
    std::istringstream model(read_input(o.model));
    std::istringstream design(read_input(o.design));
    auto p = parse_model(model);
    p *= 1.0 / p.total_mass();
    const auto nu = parse_design(design);
    write_output(o.output, serialize_dataset(generate_dataset(p, nu, o.n_obs, o.seed)));
    return kOk;
}

int run_validate(const Options& o) {
    AuditReport report;
    if (o.suite == "mra") report = mra_audit(o.n, AlphaTable(std::max<std::size_t>(o.n, 2)));
    else if (o.suite == "shuffle") report = shuffle_audit(o.n);
    else if (o.suite == "h2") report = h2_audit(o.n);
    else if (o.suite == "syt") report = syt_dimension_audit(o.n);
    else if (o.suite == "embedding") report = embedding_audit(o.n);
    else throw DomainError("unknown suite '" + o.suite + "'");
    write_output(o.output, report.to_json_lines());
    return report.passed() ? kOk : kAudit;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Multiresolution analysis of incomplete rankings"};
    app.require_subcommand(1);
    Options o;
    app.add_option("--workers", o.workers, "Worker threads (default: MRA_WORKERS or 1)")->check(CLI::PositiveNumber);
    app.add_option("--kmax", o.k_max, "Alpha table size")->check(CLI::Range(2, 10));

    auto* transform = app.add_subcommand("transform", "Wavelet transform of a ranking histogram");
    transform->add_option("rankings", o.input, "Rankings file, '-' for stdin")->required();
    transform->add_option("-o,--output", o.output, "Coefficient file");

    auto* synth = app.add_subcommand("synth", "Marginal on a subset from a coefficient file");
    synth->add_option("coefficients", o.input, "Coefficient file")->required();
    synth->add_option("--subset", o.subset, "Subset such as 1,2,3")->required();
    synth->add_flag("--simplex", o.simplex, "Project the result onto the probability simplex");
    synth->add_option("-o,--output", o.output, "Output file");

    auto* estimate = app.add_subcommand("estimate", "Wavelet empirical estimator with coverage report");
    estimate->add_option("rankings", o.input, "Rankings file, '-' for stdin")->required();
    estimate->add_option("-o,--output", o.output, "Coefficient file");
    estimate->add_option("--summary", o.summary, "Coverage report file");

    auto* smooth = app.add_subcommand("smooth", "Kernel smoothing of coefficients");
    smooth->add_option("coefficients", o.input, "Coefficient file")->required();
    smooth->set_help_flag("--help", "Print this help message and exit");
    smooth->add_option("--h", o.h, "Kernel width")->required();
    smooth->add_option("--local", o.local, "Regularize only the blocks on subsets of this subset");
    smooth->add_option("-o,--output", o.output, "Output file");

    auto* marginal_cmd = app.add_subcommand("marginal", "Naive and marginal-based empirical marginals");
    marginal_cmd->add_option("rankings", o.input, "Rankings file, '-' for stdin")->required();
    marginal_cmd->add_option("--subset", o.subset, "Subset such as 1,2,3")->required();
    marginal_cmd->add_option("-o,--output", o.output, "Output file");

    auto* gen = app.add_subcommand("gen", "Synthetic dataset from a model and a design");
    gen->add_option("--model", o.model, "Model file")->required();
    gen->add_option("--design", o.design, "Design file")->required();
    gen->add_option("--n-obs", o.n_obs, "Number of observations")->required();
    gen->add_option("--seed", o.seed, "Generator seed")->required();
    gen->add_option("-o,--output", o.output, "Output file");

    auto* validate = app.add_subcommand("validate", "Structural audits, one JSON object per check");
    validate->add_option("--suite", o.suite, "mra, shuffle, h2, syt or embedding")
        ->required()
        ->check(CLI::IsMember({"mra", "shuffle", "h2", "syt", "embedding"}));
    validate->add_option("--n", o.n, "Number of items")->required();
    validate->add_option("-o,--output", o.output, "Output file");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kOk : kParse;
    }

    try {
        if (*transform) return run_transform(o);
        if (*synth) return run_synth(o);
        if (*estimate) return run_estimate(o);
        if (*smooth) return run_smooth(o);
        if (*marginal_cmd) return run_marginal(o);
        if (*gen) return run_gen(o);
        if (*validate) return run_validate(o);
    } catch (const ParseError& e) {
        std::cerr << "mra: parse error: " << e.what() << '\n';
        return kParse;
    } catch (const DomainError& e) {
        std::cerr << "mra: " << e.what() << '\n';
        return kDomain;
    } catch (const ResourceError& e) {
        std::cerr << "mra: resource limit: " << e.what() << '\n';
        return kResource;
    } catch (const AuditFailure& e) {
        std::cerr << "mra: audit failure: " << e.what() << '\n';
        return kAudit;
    } catch (const std::exception& e) {
        std::cerr << "mra: " << e.what() << '\n';
        return kGeneric;
    }
    return kGeneric;
}
