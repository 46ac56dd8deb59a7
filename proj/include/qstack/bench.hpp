#pragma once

#include <cstddef>
#include <cstdint>
#include <ostream>
#include <vector>

#include "qstack/backend.hpp"

namespace qstack::bench {

struct BenchRow {
    BackendKind backend = BackendKind::Reference;
    std::size_t qubits = 0;
    double seconds = 0.0;
};

/// Wall time of one full Grover search (flips {1}, no probability reports).
BenchRow timeGrover(std::size_t n, const BackendHandle& backend, std::uint64_t seed = 0);

/// Writes `backend,qubits,seconds` followed by one line per row.
void writeCsv(std::ostream& out, const std::vector<BenchRow>& rows);

}  // namespace qstack::bench
