#include "qstack/bench.hpp"

#include <chrono>

#include "qstack/grover.hpp"
#include "qstack/workspace.hpp"

namespace qstack::bench {

BenchRow timeGrover(std::size_t n, const BackendHandle& backend, std::uint64_t seed) {
    const grover::GroverPlan plan = grover::makePlan(n);
    Workspace ws(seed, backend);
    const auto start = std::chrono::steady_clock::now();
    grover::groverSearch(ws, plan);
    const std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - start;
    return {backend.kind, n, elapsed.count()};
}

void writeCsv(std::ostream& out, const std::vector<BenchRow>& rows) {
    out << "backend,qubits,seconds\n";
    for (const auto& row : rows) out << to_string(row.backend) << ',' << row.qubits << ',' << row.seconds << '\n';
}

}  // namespace qstack::bench
