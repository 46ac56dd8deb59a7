#pragma once

#include <optional>
#include <span>
#include <string_view>

#include "qstack/types.hpp"
#include "qstack/workspace.hpp"

namespace qstack::gates {

enum class Builtin { X, Y, Z, H, S, T, Tinv, CNOT, CZ, SWAP, TOFF };
enum class Axis { X, Y, Z };

/// Standard gate matrices. T = diag(1, e^{i pi/4}) = P(pi/4) and Tinv is its
/// adjoint; CNOT, CZ and TOFF take their controls as the leading operands.
const Gate& builtin(Builtin kind);
std::string_view to_string(Builtin kind) noexcept;
/// Looks up a builtin by its printed name ("X", "Tinv", "CNOT", ...).
std::optional<Builtin> builtinFromName(std::string_view name) noexcept;

/// diag(1, e^{i phi}). Throws NonFinite.
Gate phase(double phi);
/// The usual cos/sin half-angle rotations about `axis`. Throws NonFinite.
Gate rotation(Axis axis, double theta);

bool checkUnitary(const Gate& g, double tol);

// Dense matrix algebra on gates of equal dimension.
Gate identity(int qubits);
Gate product(const Gate& a, const Gate& b);
Gate adjoint(const Gate& g);
Gate scaled(const Gate& g, Complex factor);
Gate kron(const Gate& a, const Gate& b);
double maxAbsDiff(const Gate& a, const Gate& b);

/// Dense matrix of `base` controlled on `controls` leading qubits: identity
/// except for the trailing base.dim() x base.dim() block.
Gate controlled(const Gate& base, int controls);

/// Toffoli built from 15 H, T, Tinv and CNOT gates; q3 is the target.
void toffEquivCircuit(Workspace& ws, const QubitName& q1, const QubitName& q2, const QubitName& q3);

/// result ^= AND(controls) using only X, CNOT and TOFF plus zero-initialized
/// ancillas named temp0, temp1, ... (first names not on the stack). Each
/// ancilla is uncomputed and measured before returning, so the stack keeps
/// its length. Throws InternalError if an ancilla does not read 0.
void toffnAncilla(Workspace& ws, std::span<const QubitName> controls, const QubitName& result);

}  // namespace qstack::gates
