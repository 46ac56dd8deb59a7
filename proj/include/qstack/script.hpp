#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "qstack/backend.hpp"
#include "qstack/types.hpp"

namespace qstack::cli {

enum class OpCode { Push, Gate, Prob, Measure, Dump };

struct Instruction {
    OpCode op = OpCode::Dump;
    std::vector<QubitName> names;
    /// Gate spec as written, e.g. "CNOT" or "Rx(0.5)".
    std::string gate_spec;
    std::optional<qstack::Gate> gate;
    QubitWeights weights;
    std::size_t line = 0;
};

struct CircuitScript {
    std::vector<Instruction> instructions;
};

/// Parses `<float>`, `<float>+<float>i` or `<float>-<float>i`.
std::optional<Complex> parseComplexLiteral(std::string_view text);

/// Resolves a builtin gate name or P(phi), Rx(theta), Ry(theta), Rz(theta).
std::optional<qstack::Gate> resolveGateSpec(std::string_view spec);

/// Parses and statically checks a script: one instruction per line,
/// `#` starts a comment.
///
///     push <name> <c> <c>
///     gate <SPEC> <name>...
///     prob <name>
///     measure <name>
///     dump
///
/// Every qubit must be pushed before use and not used after it is measured
/// (until pushed again). Throws ScriptError carrying the offending line.
CircuitScript parseScript(std::string_view text);

/// Fixed-point rendering with 8 decimals; values that round to zero print as
/// 0.00000000 regardless of sign.
std::string formatReal(double value);
/// `<re>+<im>i` / `<re>-<im>i`, re-parseable by parseComplexLiteral.
std::string formatComplex(Complex value);

/// Executes the script. `measure` emits the bit, `prob` emits "p0 p1" and
/// `dump` the flat amplitude vector, one line each. Runtime failures are
/// rethrown as ScriptError with the instruction's line.
std::string runScript(const CircuitScript& script, std::uint64_t seed, const BackendHandle& backend = {});

/// Grover demo: optional per-round probability lines, then the result bits.
/// Throws OutOfRange unless 1 <= n <= 24.
std::string groverCommand(std::size_t n, const std::set<std::size_t>& flips, std::uint64_t seed,
                          bool show_convergence, const BackendHandle& backend = {});

constexpr std::size_t kMaxGroverQubits = 24;

}  // namespace qstack::cli
