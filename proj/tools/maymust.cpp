#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "maymust/check.hpp"
#include "maymust/error.hpp"
#include "maymust/generate.hpp"
#include "maymust/io.hpp"
#include "maymust/semantics.hpp"

namespace {

using namespace maymust;

constexpr int kOk = 0;
constexpr int kSolverError = 1;
constexpr int kInputError = 2;

bool is_input_error(ErrorKind k) {
    switch (k) {
        case ErrorKind::SyntaxError:
        case ErrorKind::DuplicateArgument:
        case ErrorKind::UnknownArgumentInAttack:
        case ErrorKind::MayExceedsMust:
        case ErrorKind::FractionOrderViolation:
        case ErrorKind::InvalidFraction:
        case ErrorKind::InvalidProbability:
        case ErrorKind::UnknownSemantics:
            return true;
        default:
            return false;
    }
}

int report(const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return is_input_error(e.kind()) ? kInputError : kSolverError;
}

Framework load(const std::string& path) {
    try {
        return load_mmaf(path);
    } catch (const Error&) {
        throw;
    } catch (const std::exception& e) {
        throw Error(ErrorKind::SyntaxError, e.what());
    }
}

struct SolveArgs {
    std::string input;
    std::string semantics;
    std::string engine = "brute";
    std::string format = "json";
    bool all = false;
    unsigned threads = 1;
};

int run_solve(const SolveArgs& a) {
    const auto sem = parse_semantics(a.semantics);
    if (!sem || *sem >= Semantics::DungComplete || *sem == Semantics::PreMaximallyProper)
        throw Error(ErrorKind::UnknownSemantics, "'" + a.semantics + "'");
    const Framework f = load(a.input);
    SolveOptions opts{*parse_engine(a.engine), a.threads};
    const bool scanned = opts.engine == Engine::Brute || *sem >= Semantics::AdfComplete;
    if (scanned && f.size() > brute_force_bound())
        throw Error(ErrorKind::InstanceTooLarge, std::to_string(f.size()) + " arguments exceed the brute-force bound; "
                                                 "use --engine scc or raise MAYMUST_MAX_BRUTE");
    const SemanticsResult r = solve(f, *sem, opts);
    const OutputFormat fmt = a.format == "text" ? OutputFormat::Text : a.format == "dot" ? OutputFormat::Dot : OutputFormat::Json;
    std::cout << render(f, r, fmt, a.all);
    return kOk;
}

struct GenArgs {
    std::size_t n = 0;
    std::string prob = "0.3";
    std::string tuples = "uniform";
    std::uint64_t seed = 0;
    std::string output;
};

int run_gen(const GenArgs& a) {
    GeneratorParams p;
    p.n = a.n;
    try {
        p.edge_prob = Rational::parse_decimal(a.prob);
    } catch (const Error&) {
        throw Error(ErrorKind::InvalidProbability, "'" + a.prob + "'");
    }
    const auto mode = parse_tuple_mode(a.tuples);
    if (!mode) throw Error(ErrorKind::SyntaxError, "unknown tuple mode '" + a.tuples + "'");
    p.tuples = *mode;
    p.seed = a.seed;
    const std::string text = serialize_document(generate_document(p));
    if (a.output.empty()) {
        std::cout << text;
    } else {
        std::ofstream out(a.output, std::ios::binary);
        if (!out) throw std::runtime_error("cannot write '" + a.output + "'");
        out << text;
    }
    return kOk;
}

struct CheckArgs {
    std::string input;
    std::size_t fuzz = 0;
    std::size_t max_args = 7;
    std::uint64_t seed = 1;
    std::string prob = "0.3";
    std::string tuples = "uniform";
    unsigned threads = 1;
    std::string archive;
    bool no_minimize = false;
};

void archive_failures(const std::string& dir, const std::vector<Verdict>& failures) {
    if (dir.empty() || failures.empty()) return;
    std::filesystem::create_directories(dir);
    std::size_t k = 0;
    for (const Verdict& v : failures) {
        std::ofstream out(std::filesystem::path(dir) / (v.check + "-" + std::to_string(++k) + ".mmaf"));
        out << "# " << v.detail << '\n';
        if (!v.counterexample.empty()) out << "# counterexample: " << v.counterexample << '\n';
        out << v.reproducer;
    }
}

int run_check(const CheckArgs& a) {
    CheckOptions opts{!a.no_minimize};
    if (!a.input.empty()) {
        const DiffReport r = check_instance(load(a.input), opts);
        std::cout << render_report(r);
        std::vector<Verdict> failed;
        for (const Verdict* v : r.failures()) failed.push_back(*v);
        archive_failures(a.archive, failed);
        return r.passed() ? kOk : kSolverError;
    }
    FuzzParams p;
    p.count = a.fuzz;
    p.max_args = a.max_args;
    p.seed = a.seed;
    try {
        p.edge_prob = Rational::parse_decimal(a.prob);
    } catch (const Error&) {
        throw Error(ErrorKind::InvalidProbability, "'" + a.prob + "'");
    }
    const auto mode = parse_tuple_mode(a.tuples);
    if (!mode) throw Error(ErrorKind::SyntaxError, "unknown tuple mode '" + a.tuples + "'");
    p.tuples = *mode;
    p.threads = a.threads;
    if (p.max_args > brute_force_bound())
        throw Error(ErrorKind::InstanceTooLarge, "--max-args exceeds the brute-force bound");
    const FuzzSummary s = fuzz(p, opts);
    std::cout << render_summary(s);
    archive_failures(a.archive, s.failures);
    return s.passed() ? kOk : kSolverError;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Solver for may-must argumentation frameworks"};
    app.require_subcommand(1);

    SolveArgs solve_args;
    auto* solve_cmd = app.add_subcommand("solve", "Compute a semantics of an .mmaf instance");
    solve_cmd->add_option("-i,--input", solve_args.input, "Instance file")->required();
    solve_cmd->add_option("-s,--semantics", solve_args.semantics,
                          "exact | maxi-complete | maxi-preferred | maxi-stable | maxi-grounded | "
                          "adf-complete | adf-preferred | adf-grounded")
        ->required();
    solve_cmd->add_option("--engine", solve_args.engine, "brute | scc")->check(CLI::IsMember({"brute", "scc"}));
    solve_cmd->add_option("-o,--output", solve_args.format, "json | text | dot")
        ->check(CLI::IsMember({"json", "text", "dot"}));
    solve_cmd->add_flag("--all", solve_args.all, "DOT: one graph per labelling");
    solve_cmd->add_option("--threads", solve_args.threads, "Worker threads for exhaustive scans");

    GenArgs gen_args;
    auto* gen_cmd = app.add_subcommand("gen", "Generate a random instance");
    gen_cmd->add_option("-n", gen_args.n, "Number of arguments")->required();
    gen_cmd->add_option("-p,--prob", gen_args.prob, "Attack probability (decimal)");
    gen_cmd->add_option("--tuples", gen_args.tuples, "dung | uniform | uniform:K | ratio");
    gen_cmd->add_option("--seed", gen_args.seed, "64-bit seed");
    gen_cmd->add_option("-o,--output", gen_args.output, "Output file (default stdout)");

    CheckArgs check_args;
    auto* check_cmd = app.add_subcommand("check", "Differential and invariant checks");
    auto* in_opt = check_cmd->add_option("-i,--input", check_args.input, "Instance file");
    auto* fuzz_opt = check_cmd->add_option("--fuzz", check_args.fuzz, "Number of random instances");
    in_opt->excludes(fuzz_opt);
    check_cmd->add_option("--max-args", check_args.max_args, "Largest random instance");
    check_cmd->add_option("--seed", check_args.seed, "Fuzz seed");
    check_cmd->add_option("-p,--prob", check_args.prob, "Attack probability for fuzzing");
    check_cmd->add_option("--tuples", check_args.tuples, "Tuple mode for fuzzing");
    check_cmd->add_option("--threads", check_args.threads, "Parallel fuzz workers");
    check_cmd->add_option("--archive", check_args.archive, "Directory for failing reproducers");
    check_cmd->add_flag("--no-minimize", check_args.no_minimize, "Archive failing instances unshrunk");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kOk : kInputError;
    }

    try {
        if (*solve_cmd) return run_solve(solve_args);
        if (*gen_cmd) return run_gen(gen_args);
        if (*check_cmd) {
            if (check_args.input.empty() && check_args.fuzz == 0) {
                std::cerr << "error: check needs -i FILE or --fuzz N\n";
                return kInputError;
            }
            return run_check(check_args);
        }
    } catch (const Error& e) {
        return report(e);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kInputError;
    }
    return kOk;
}
