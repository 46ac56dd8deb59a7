#include "qstack/workspace.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <string>
#include <unordered_set>

#include "qstack/error.hpp"

namespace qstack {
namespace {

// Uniform draw in [0, 1) from the top 53 bits; independent of the standard
// library's distribution implementation.
double canonical(std::mt19937_64& rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

}  // namespace

Workspace::Workspace(std::uint64_t seed, const BackendHandle& backend)
    : Workspace(seed, makeBackend(backend)) {}

Workspace::Workspace(std::uint64_t seed, std::shared_ptr<const Backend> backend)
    : rng_(seed), backend_(std::move(backend)) {
    if (!backend_) throw Error(ErrorCode::InvalidArgument, "workspace needs a backend");
}

Workspace newWorkspace(std::uint64_t seed, const BackendHandle& backend) { return Workspace(seed, backend); }

bool Workspace::contains(const QubitName& name) const {
    return std::find(names_.begin(), names_.end(), name) != names_.end();
}

double Workspace::normSquared() const {
    double total = 0.0;
    for (const auto& a : amplitudes_) total += std::norm(a);
    return total;
}

// Distance from the top of the stack; 1 means the name is on top.
std::size_t Workspace::depthOf(const QubitName& name) const {
    const auto it = std::find(names_.begin(), names_.end(), name);
    if (it == names_.end()) throw Error(ErrorCode::UnknownName, "no qubit named '" + name + "'");
    return static_cast<std::size_t>(names_.end() - it);
}

void Workspace::checkNorm() const {
#ifndef NDEBUG
    assert(std::abs(normSquared() - 1.0) <= 1e-9 && "workspace drifted from unit norm");
#endif
}

void Workspace::pushQubit(const QubitName& name, const QubitWeights& raw) {
    if (contains(name)) throw Error(ErrorCode::DuplicateName, "qubit '" + name + "' is already on the stack");
    const QubitWeights w = raw.normalized();
    scratch_.resize(2 * amplitudes_.size());
    backend_->kronExpand(amplitudes_, w, scratch_);
    amplitudes_.swap(scratch_);
    names_.push_back(name);
    checkNorm();
}

void Workspace::swapToTop(std::size_t k) {
    if (k <= 1) return;
    const std::size_t n = names_.size();
    const std::size_t inner = std::size_t{1} << (k - 1);
    const std::size_t outer = std::size_t{1} << (n - k);
    scratch_.resize(amplitudes_.size());
    backend_->middleAxisSwap(amplitudes_, outer, inner, scratch_);
    amplitudes_.swap(scratch_);
    const auto moved = names_.begin() + static_cast<std::ptrdiff_t>(n - k);
    std::rotate(moved, moved + 1, names_.end());
}

void Workspace::tosQubit(const QubitName& name) { swapToTop(depthOf(name)); }

void Workspace::tosPosition(std::size_t k) {
    if (k < 1 || k > names_.size()) {
        throw Error(ErrorCode::OutOfRange, "position " + std::to_string(k) + " outside stack of " +
                                               std::to_string(names_.size()));
    }
    swapToTop(k);
}

void Workspace::applyGate(const Gate& gate, std::initializer_list<QubitName> names) {
    applyGate(gate, std::span<const QubitName>(names.begin(), names.size()));
}

void Workspace::applyGate(const Gate& gate, std::span<const QubitName> names) {
    if (names.empty()) throw Error(ErrorCode::InvalidArgument, "applyGate needs at least one qubit name");
    std::unordered_set<std::string_view> seen;
    for (const auto& name : names) {
        if (!seen.insert(name).second) {
            throw Error(ErrorCode::DuplicateName, "qubit '" + name + "' listed twice in one gate");
        }
        depthOf(name);
    }
    const auto width = static_cast<std::size_t>(gate.qubits());
    if (width > names_.size() || width > names.size()) {
        throw Error(ErrorCode::GateTooLarge, std::to_string(width) + "-qubit gate given " +
                                                 std::to_string(names.size()) + " operands on a stack of " +
                                                 std::to_string(names_.size()));
    }
    const auto suffix = names_.end() - static_cast<std::ptrdiff_t>(names.size());
    if (!std::equal(names.begin(), names.end(), suffix, names_.end())) {
        for (const auto& name : names) tosQubit(name);
    }
    backend_->suffixMatmulInPlace(amplitudes_, std::size_t{1} << names.size(), gate);
    checkNorm();
}

void Workspace::applyGateTop(const Gate& gate) {
    const auto width = static_cast<std::size_t>(gate.qubits());
    if (width > names_.size()) {
        throw Error(ErrorCode::GateTooLarge, std::to_string(width) + "-qubit gate on a stack of " +
                                                 std::to_string(names_.size()));
    }
    backend_->suffixMatmulInPlace(amplitudes_, gate.dim(), gate);
    checkNorm();
}

ProbabilityPair Workspace::probQubit(const QubitName& name) {
    tosQubit(name);
    const ProbabilityPair sums = backend_->columnNormsSquared(amplitudes_);
    const double total = sums.p0 + sums.p1;
    return {sums.p0 / total, sums.p1 / total};
}

int Workspace::measureQubit(const QubitName& name) {
    const ProbabilityPair p = probQubit(name);
    // u < p0 never holds when p0 == 0 and always holds when p1 == 0.
    const int outcome = canonical(rng_) < p.p0 ? 0 : 1;
    const double scale = 1.0 / std::sqrt(outcome == 0 ? p.p0 : p.p1);
    const std::size_t rows = amplitudes_.size() / 2;
    for (std::size_t r = 0; r < rows; ++r) amplitudes_[r] = amplitudes_[2 * r + outcome] * scale;
    amplitudes_.resize(rows);
    names_.pop_back();
    checkNorm();
    return outcome;
}

}  // namespace qstack
