#include "qstack/grover.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <unordered_set>

#include "qstack/error.hpp"
#include "qstack/gates.hpp"

namespace qstack::grover {
namespace {

using gates::Builtin;

void requireWholeStack(const Workspace& ws, std::span<const QubitName> qubits) {
    std::unordered_set<std::string_view> listed;
    for (const auto& q : qubits) {
        if (!ws.contains(q)) throw Error(ErrorCode::UnknownName, "no qubit named '" + q + "'");
        if (!listed.insert(q).second) throw Error(ErrorCode::DuplicateName, "qubit '" + q + "' listed twice");
    }
    if (listed.size() != ws.qubitCount()) {
        throw Error(ErrorCode::InvalidArgument, "phase oracles act on the whole stack: got " +
                                                    std::to_string(listed.size()) + " of " +
                                                    std::to_string(ws.qubitCount()) + " qubits");
    }
}

// Z controlled on every other qubit, in current stack order so nothing moves.
void controlledZAll(Workspace& ws) {
    const std::vector<QubitName> stack = ws.names();
    ws.applyGate(gates::builtin(Builtin::Z), stack);
}

// Bit of `name` within a flat index of `ws`.
int bitOf(const Workspace& ws, std::size_t index, const QubitName& name) {
    const auto& names = ws.names();
    const auto it = std::find(names.begin(), names.end(), name);
    if (it == names.end()) throw Error(ErrorCode::UnknownName, "no qubit named '" + name + "'");
    const auto shift = static_cast<std::size_t>(names.end() - it) - 1;
    return static_cast<int>((index >> shift) & 1U);
}

}  // namespace

std::size_t planIterations(std::size_t n) {
    if (n < 1) throw Error(ErrorCode::OutOfRange, "Grover search needs at least one qubit");
    const double m = std::ldexp(1.0, static_cast<int>(n));
    return static_cast<std::size_t>(std::floor(std::numbers::pi / 4 * std::sqrt(m) - 0.5));
}

GroverPlan makePlan(std::size_t n, std::set<std::size_t> flips) {
    GroverPlan plan{n, planIterations(n), std::move(flips)};
    for (const std::size_t p : plan.target_flip_positions) {
        if (p >= n) {
            throw Error(ErrorCode::OutOfRange,
                        "flip position " + std::to_string(p) + " outside " + std::to_string(n) + " qubits");
        }
    }
    return plan;
}

std::vector<QubitName> qubitNames(std::size_t n) {
    std::vector<QubitName> names;
    names.reserve(n);
    for (std::size_t i = 0; i < n; ++i) names.push_back(std::to_string(i));
    return names;
}

void zeroBooleanOracle(Workspace& ws, std::span<const QubitName> qubits, const QubitName& result) {
    const Gate& x = gates::builtin(Builtin::X);
    for (const auto& q : qubits) ws.applyGate(x, {q});
    gates::toffnAncilla(ws, qubits, result);
    for (const auto& q : qubits) ws.applyGate(x, {q});
}

void zeroPhaseOracle(Workspace& ws, std::span<const QubitName> qubits) {
    requireWholeStack(ws, qubits);
    const Gate& x = gates::builtin(Builtin::X);
    for (const auto& q : qubits) ws.applyGate(x, {q});
    controlledZAll(ws);
    for (const auto& q : qubits) ws.applyGate(x, {q});
}

void samplePhaseOracle(Workspace& ws, std::span<const QubitName> qubits, const GroverPlan& plan) {
    requireWholeStack(ws, qubits);
    const Gate& x = gates::builtin(Builtin::X);
    for (const std::size_t p : plan.target_flip_positions) {
        if (p >= qubits.size()) throw Error(ErrorCode::OutOfRange, "flip position outside qubit list");
        ws.applyGate(x, {qubits[p]});
    }
    controlledZAll(ws);
    for (const std::size_t p : plan.target_flip_positions) ws.applyGate(x, {qubits[p]});
}

std::vector<QubitName> amplify(Workspace& ws, const GroverPlan& plan, const ProbabilitySink& report) {
    if (!ws.empty()) throw Error(ErrorCode::InvalidArgument, "Grover search needs an empty workspace");
    if (plan.n < 1) throw Error(ErrorCode::OutOfRange, "Grover search needs at least one qubit");
    const std::vector<QubitName> qubits = qubitNames(plan.n);
    for (const auto& q : qubits) ws.pushQubit(q, {1.0, 1.0});
    const Gate& h = gates::builtin(Builtin::H);
    for (std::size_t round = 1; round <= plan.iterations; ++round) {
        samplePhaseOracle(ws, qubits, plan);
        for (const auto& q : qubits) ws.applyGate(h, {q});
        zeroPhaseOracle(ws, qubits);
        for (const auto& q : qubits) ws.applyGate(h, {q});
        if (report) report(round, ws.probQubit(qubits[0]));
    }
    return qubits;
}

std::string groverSearch(Workspace& ws, const GroverPlan& plan, const ProbabilitySink& report) {
    const std::vector<QubitName> qubits = amplify(ws, plan, report);
    std::string bits;
    for (auto it = qubits.rbegin(); it != qubits.rend(); ++it) bits += static_cast<char>('0' + ws.measureQubit(*it));
    return bits;
}

std::string mostLikelyResult(const Workspace& ws, std::span<const QubitName> qubits) {
    const auto amps = ws.amplitudes();
    std::size_t best = 0;
    for (std::size_t i = 1; i < amps.size(); ++i) {
        if (std::norm(amps[i]) > std::norm(amps[best])) best = i;
    }
    std::string bits;
    for (auto it = qubits.rbegin(); it != qubits.rend(); ++it) bits += static_cast<char>('0' + bitOf(ws, best, *it));
    return bits;
}

double resultProbability(const Workspace& ws, std::span<const QubitName> qubits, const std::string& bits) {
    if (bits.size() != qubits.size() || qubits.size() != ws.qubitCount()) {
        throw Error(ErrorCode::ShapeMismatch, "bit string must cover every qubit on the stack");
    }
    const auto& names = ws.names();
    std::size_t index = 0;
    for (std::size_t j = 0; j < qubits.size(); ++j) {
        const QubitName& q = qubits[qubits.size() - 1 - j];
        const auto it = std::find(names.begin(), names.end(), q);
        if (it == names.end()) throw Error(ErrorCode::UnknownName, "no qubit named '" + q + "'");
        if (bits[j] == '1') index |= std::size_t{1} << (static_cast<std::size_t>(names.end() - it) - 1);
    }
    return std::norm(ws.amplitudes()[index]);
}

std::string expectedResult(const GroverPlan& plan) {
    std::string bits(plan.n, '1');
    for (const std::size_t p : plan.target_flip_positions) bits[plan.n - 1 - p] = '0';
    return bits;
}

}  // namespace qstack::grover
