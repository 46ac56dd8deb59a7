#pragma once

#include <cstddef>
#include <functional>
#include <set>
#include <span>
#include <string>
#include <vector>

#include "qstack/types.hpp"
#include "qstack/workspace.hpp"

namespace qstack::grover {

/// floor(pi/4 * sqrt(2^n) - 1/2). Throws OutOfRange for n < 1.
std::size_t planIterations(std::size_t n);

struct GroverPlan {
    std::size_t n = 0;
    std::size_t iterations = 0;
    /// Qubit indices the sample oracle negates; the marked state is all ones
    /// except at these positions.
    std::set<std::size_t> target_flip_positions;
};

/// Validates positions against n and fills in the optimal iteration count.
GroverPlan makePlan(std::size_t n, std::set<std::size_t> flips = {1});

/// Qubit names "0" .. "n-1".
std::vector<QubitName> qubitNames(std::size_t n);

/// result ^= (all qubits are 0). Inputs are restored.
void zeroBooleanOracle(Workspace& ws, std::span<const QubitName> qubits, const QubitName& result);

/// Negates the all-zeros amplitude. `qubits` must name the whole stack.
void zeroPhaseOracle(Workspace& ws, std::span<const QubitName> qubits);

/// Negates the amplitude whose bits are all 1 except at the plan's flip
/// positions (indices into `qubits`). `qubits` must name the whole stack.
void samplePhaseOracle(Workspace& ws, std::span<const QubitName> qubits, const GroverPlan& plan);

/// Called after each round with the 1-based round number and qubit 0's
/// outcome probabilities.
using ProbabilitySink = std::function<void(std::size_t round, const ProbabilityPair&)>;

/// Pushes the uniform superposition and runs all rounds without measuring.
/// Requires an empty workspace. Returns the qubit names in push order.
std::vector<QubitName> amplify(Workspace& ws, const GroverPlan& plan, const ProbabilitySink& report = {});

/// amplify() followed by measuring every qubit from the last pushed to the
/// first; the returned string lists bits in that measurement order.
std::string groverSearch(Workspace& ws, const GroverPlan& plan, const ProbabilitySink& report = {});

/// The computational basis state of maximal probability, rendered in the
/// same order groverSearch prints (qubits[n-1] first).
std::string mostLikelyResult(const Workspace& ws, std::span<const QubitName> qubits);

/// Probability of the basis state groverSearch would print as `bits`.
double resultProbability(const Workspace& ws, std::span<const QubitName> qubits, const std::string& bits);

/// The string groverSearch should find for `plan`.
std::string expectedResult(const GroverPlan& plan);

}  // namespace qstack::grover
