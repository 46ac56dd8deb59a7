// qstack: run circuit scripts, the Grover demo, and backend benchmarks.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "qstack/bench.hpp"
#include "qstack/error.hpp"
#include "qstack/script.hpp"

namespace {

constexpr int kExitStatic = 1;
constexpr int kExitRuntime = 2;

std::uint64_t resolveSeed(const std::optional<std::uint64_t>& seed) {
    if (seed) return *seed;
    std::random_device rd;
    return (static_cast<std::uint64_t>(rd()) << 32) | rd();
}

int runCommand(const std::string& path, const std::optional<std::uint64_t>& seed, const std::string& backend) {
    std::ifstream in(path);
    if (!in) {
        std::cerr << "qstack: cannot open '" << path << "'\n";
        return kExitStatic;
    }
    std::stringstream text;
    text << in.rdbuf();

    qstack::cli::CircuitScript script;
    try {
        script = qstack::cli::parseScript(text.str());
    } catch (const qstack::Error& e) {
        std::cerr << path << ": " << e.what() << '\n';
        return kExitStatic;
    }
    try {
        std::cout << qstack::cli::runScript(script, resolveSeed(seed), {qstack::parseBackendKind(backend)});
    } catch (const qstack::Error& e) {
        std::cerr << path << ": " << e.what() << '\n';
        return kExitRuntime;
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Stack-machine state-vector quantum simulator"};
    app.require_subcommand(1);

    std::optional<std::uint64_t> seed;
    std::string backend = "optimized";
    const auto backend_check = CLI::IsMember({"reference", "optimized"});

    auto* run = app.add_subcommand("run", "Execute a circuit script");
    std::string script_path;
    run->add_option("file", script_path, "Circuit script")->required();
    run->add_option("--seed", seed, "Measurement RNG seed (default: entropy)");
    run->add_option("--backend", backend, "Dense kernel backend")->check(backend_check);

    auto* grover = app.add_subcommand("grover", "Grover search for the all-ones-except-flips target");
    std::size_t n = 6;
    std::vector<std::size_t> flips;
    bool show_convergence = false;
    grover->add_option("--n", n, "Number of qubits")->required();
    auto* flips_opt =
        grover->add_option("--flips", flips, "Qubit positions that are 0 in the target (default: 1)")->delimiter(',');
    grover->add_option("--seed", seed, "Measurement RNG seed (default: entropy)");
    grover->add_option("--backend", backend, "Dense kernel backend")->check(backend_check);
    grover->add_flag("--show-convergence", show_convergence, "Print qubit 0 probabilities after each round");

    auto* bench = app.add_subcommand("bench", "Time a Grover search per backend and print CSV");
    std::size_t bench_n = 16;
    std::vector<std::string> bench_backends{"reference", "optimized"};
    unsigned workers = 0;
    bench->add_option("--n", bench_n, "Number of qubits")->required();
    bench->add_option("--backend", bench_backends, "Backends to time")->delimiter(',')->check(backend_check);
    bench->add_option("--workers", workers, "Optimized backend worker threads (0 = all cores)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kExitStatic;
    }

    if (run->parsed()) return runCommand(script_path, seed, backend);

    if (grover->parsed()) {
        try {
            std::set<std::size_t> flip_set(flips.begin(), flips.end());
            // A single qubit has no position 1; its default target is "1".
            if (flips_opt->count() == 0 && n > 1) flip_set = {1};
            std::cout << qstack::cli::groverCommand(n, flip_set, resolveSeed(seed), show_convergence,
                                                    {qstack::parseBackendKind(backend)});
        } catch (const qstack::Error& e) {
            std::cerr << "qstack grover: " << e.what() << '\n';
            return e.code() == qstack::ErrorCode::OutOfRange ? kExitStatic : kExitRuntime;
        }
        return 0;
    }

    if (bench->parsed()) {
        if (bench_n < 1 || bench_n > qstack::cli::kMaxGroverQubits) {
            std::cerr << "qstack bench: --n must be in [1, " << qstack::cli::kMaxGroverQubits << "]\n";
            return kExitStatic;
        }
        std::vector<qstack::bench::BenchRow> rows;
        for (const auto& name : bench_backends) {
            rows.push_back(qstack::bench::timeGrover(bench_n, {qstack::parseBackendKind(name), workers}));
        }
        qstack::bench::writeCsv(std::cout, rows);
        return 0;
    }
    return 0;
}
