#include "qstack/gates.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <string>
#include <unordered_set>
#include <vector>

#include "qstack/error.hpp"

namespace qstack::gates {
namespace {

constexpr Complex kI{0.0, 1.0};

struct NamedGate {
    Builtin kind;
    std::string_view name;
};

constexpr std::array<NamedGate, 11> kNames{{
    {Builtin::X, "X"},
    {Builtin::Y, "Y"},
    {Builtin::Z, "Z"},
    {Builtin::H, "H"},
    {Builtin::S, "S"},
    {Builtin::T, "T"},
    {Builtin::Tinv, "Tinv"},
    {Builtin::CNOT, "CNOT"},
    {Builtin::CZ, "CZ"},
    {Builtin::SWAP, "SWAP"},
    {Builtin::TOFF, "TOFF"},
}};

Gate makeBuiltin(Builtin kind) {
    const double r = std::sqrt(0.5);
    const Complex t = std::exp(kI * (std::numbers::pi / 4));
    switch (kind) {
        case Builtin::X: return Gate({0, 1, 1, 0});
        case Builtin::Y: return Gate({0, -kI, kI, 0});
        case Builtin::Z: return Gate({1, 0, 0, -1});
        case Builtin::H: return Gate({r, r, r, -r});
        case Builtin::S: return Gate({1, 0, 0, kI});
        case Builtin::T: return Gate({1, 0, 0, t});
        case Builtin::Tinv: return Gate({1, 0, 0, std::conj(t)});
        case Builtin::CNOT: return controlled(makeBuiltin(Builtin::X), 1);
        case Builtin::CZ: return controlled(makeBuiltin(Builtin::Z), 1);
        case Builtin::SWAP:
            return Gate({1, 0, 0, 0,  //
                         0, 0, 1, 0,  //
                         0, 1, 0, 0,  //
                         0, 0, 0, 1});
        case Builtin::TOFF: return controlled(makeBuiltin(Builtin::X), 2);
    }
    throw Error(ErrorCode::InvalidArgument, "unknown builtin gate");
}

void requireFinite(double value, const char* what) {
    if (!std::isfinite(value)) throw Error(ErrorCode::NonFinite, std::string(what) + " must be finite");
}

void requireSameDim(const Gate& a, const Gate& b) {
    if (a.dim() != b.dim()) {
        throw Error(ErrorCode::ShapeMismatch, "gate dimensions differ: " + std::to_string(a.dim()) + " vs " +
                                                  std::to_string(b.dim()));
    }
}

}  // namespace

const Gate& builtin(Builtin kind) {
    static const std::vector<Gate> table = [] {
        std::vector<Gate> gates;
        for (const auto& entry : kNames) gates.push_back(makeBuiltin(entry.kind));
        return gates;
    }();
    return table[static_cast<std::size_t>(kind)];
}

std::string_view to_string(Builtin kind) noexcept { return kNames[static_cast<std::size_t>(kind)].name; }

std::optional<Builtin> builtinFromName(std::string_view name) noexcept {
    for (const auto& entry : kNames) {
        if (entry.name == name) return entry.kind;
    }
    return std::nullopt;
}

Gate phase(double phi) {
    requireFinite(phi, "phase angle");
    return Gate({1, 0, 0, std::exp(kI * phi)});
}

Gate rotation(Axis axis, double theta) {
    requireFinite(theta, "rotation angle");
    const double c = std::cos(theta / 2);
    const double s = std::sin(theta / 2);
    switch (axis) {
        case Axis::X: return Gate({c, -kI * s, -kI * s, c});
        case Axis::Y: return Gate({c, -s, s, c});
        case Axis::Z: return Gate({std::exp(-kI * theta / 2.0), 0, 0, std::exp(kI * theta / 2.0)});
    }
    throw Error(ErrorCode::InvalidArgument, "unknown rotation axis");
}

bool checkUnitary(const Gate& g, double tol) {
    const std::size_t d = g.dim();
    for (std::size_t i = 0; i < d; ++i) {
        for (std::size_t j = 0; j < d; ++j) {
            Complex acc{};
            for (std::size_t k = 0; k < d; ++k) acc += g(i, k) * std::conj(g(j, k));
            if (std::abs(acc - (i == j ? 1.0 : 0.0)) > tol) return false;
        }
    }
    return true;
}

Gate identity(int qubits) {
    const std::size_t d = std::size_t{1} << qubits;
    std::vector<Complex> m(d * d);
    for (std::size_t i = 0; i < d; ++i) m[i * d + i] = 1.0;
    return Gate(std::move(m));
}

Gate product(const Gate& a, const Gate& b) {
    requireSameDim(a, b);
    const std::size_t d = a.dim();
    std::vector<Complex> m(d * d);
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t k = 0; k < d; ++k)
            for (std::size_t j = 0; j < d; ++j) m[i * d + j] += a(i, k) * b(k, j);
    return Gate(std::move(m));
}

Gate adjoint(const Gate& g) {
    const std::size_t d = g.dim();
    std::vector<Complex> m(d * d);
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) m[i * d + j] = std::conj(g(j, i));
    return Gate(std::move(m));
}

Gate scaled(const Gate& g, Complex factor) {
    std::vector<Complex> m(g.data().begin(), g.data().end());
    for (auto& v : m) v *= factor;
    return Gate(std::move(m));
}

Gate kron(const Gate& a, const Gate& b) {
    const std::size_t da = a.dim(), db = b.dim(), d = da * db;
    std::vector<Complex> m(d * d);
    for (std::size_t i = 0; i < da; ++i)
        for (std::size_t j = 0; j < da; ++j)
            for (std::size_t k = 0; k < db; ++k)
                for (std::size_t l = 0; l < db; ++l) m[(i * db + k) * d + (j * db + l)] = a(i, j) * b(k, l);
    return Gate(std::move(m));
}

double maxAbsDiff(const Gate& a, const Gate& b) {
    requireSameDim(a, b);
    double worst = 0.0;
    for (std::size_t i = 0; i < a.data().size(); ++i) worst = std::max(worst, std::abs(a.data()[i] - b.data()[i]));
    return worst;
}

Gate controlled(const Gate& base, int controls) {
    if (controls < 0) throw Error(ErrorCode::InvalidArgument, "control count must be non-negative");
    const std::size_t db = base.dim();
    const std::size_t d = db << controls;
    std::vector<Complex> m(d * d);
    const std::size_t offset = d - db;
    for (std::size_t i = 0; i < offset; ++i) m[i * d + i] = 1.0;
    for (std::size_t i = 0; i < db; ++i)
        for (std::size_t j = 0; j < db; ++j) m[(offset + i) * d + offset + j] = base(i, j);
    return Gate(std::move(m));
}

void toffEquivCircuit(Workspace& ws, const QubitName& q1, const QubitName& q2, const QubitName& q3) {
    const Gate& h = builtin(Builtin::H);
    const Gate& t = builtin(Builtin::T);
    const Gate& tinv = builtin(Builtin::Tinv);
    const Gate& cnot = builtin(Builtin::CNOT);
    ws.applyGate(h, {q3});
    ws.applyGate(cnot, {q2, q3});
    ws.applyGate(tinv, {q3});
    ws.applyGate(cnot, {q1, q3});
    ws.applyGate(t, {q3});
    ws.applyGate(cnot, {q2, q3});
    ws.applyGate(tinv, {q3});
    ws.applyGate(cnot, {q1, q3});
    ws.applyGate(t, {q2});
    ws.applyGate(t, {q3});
    ws.applyGate(h, {q3});
    ws.applyGate(cnot, {q1, q2});
    ws.applyGate(t, {q1});
    ws.applyGate(tinv, {q2});
    ws.applyGate(cnot, {q1, q2});
}

namespace {

QubitName freshTempName(const Workspace& ws) {
    for (std::size_t k = 0;; ++k) {
        QubitName candidate = "temp" + std::to_string(k);
        if (!ws.contains(candidate)) return candidate;
    }
}

void toffnRecursive(Workspace& ws, std::vector<QubitName> controls, const QubitName& result) {
    const Gate& toff = builtin(Builtin::TOFF);
    switch (controls.size()) {
        case 0: ws.applyGate(builtin(Builtin::X), {result}); return;
        case 1: ws.applyGate(builtin(Builtin::CNOT), {controls[0], result}); return;
        case 2: ws.applyGate(toff, {controls[0], controls[1], result}); return;
        default: break;
    }
    const QubitName temp = freshTempName(ws);
    ws.pushQubit(temp, {1.0, 0.0});
    ws.applyGate(toff, {controls[0], controls[1], temp});
    std::vector<QubitName> rest(controls.begin() + 2, controls.end());
    rest.push_back(temp);
    toffnRecursive(ws, std::move(rest), result);
    ws.applyGate(toff, {controls[0], controls[1], temp});
    if (ws.measureQubit(temp) != 0) {
        throw Error(ErrorCode::InternalError, "ancilla '" + temp + "' was not uncomputed to 0");
    }
}

}  // namespace

void toffnAncilla(Workspace& ws, std::span<const QubitName> controls, const QubitName& result) {
    std::unordered_set<std::string_view> seen{result};
    if (!ws.contains(result)) throw Error(ErrorCode::UnknownName, "no qubit named '" + result + "'");
    for (const auto& c : controls) {
        if (!ws.contains(c)) throw Error(ErrorCode::UnknownName, "no qubit named '" + c + "'");
        if (!seen.insert(c).second) {
            throw Error(ErrorCode::DuplicateName, "qubit '" + c + "' used twice in a multi-controlled NOT");
        }
    }
    toffnRecursive(ws, std::vector<QubitName>(controls.begin(), controls.end()), result);
}

}  // namespace qstack::gates
