#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <memory>
#include <random>
#include <span>
#include <vector>

#include "qstack/backend.hpp"
#include "qstack/types.hpp"

namespace qstack {

/// The simulator state: 2^N amplitudes plus the stack of qubit names.
///
/// The qubit on top of the stack (the last name) is the least significant bit
/// of the flat amplitude index; names()[0] is the most significant bit. Every
/// public mutator leaves the amplitudes unit-norm. A Workspace has a single
/// owner: it may be moved between threads but must not be shared while being
/// mutated.
class Workspace {
public:
    explicit Workspace(std::uint64_t seed = 0, const BackendHandle& backend = {});
    Workspace(std::uint64_t seed, std::shared_ptr<const Backend> backend);

    /// Normalizes `raw` and appends the qubit as the new top of stack.
    /// Throws DuplicateName or ZeroWeights.
    void pushQubit(const QubitName& name, const QubitWeights& raw);

    /// Moves `name` to the top of the stack, shifting the qubits above it down
    /// by one. No-op when it is already on top. Throws UnknownName.
    void tosQubit(const QubitName& name);

    /// Positional form: moves the k-th qubit from the top (k = 1 is the top).
    /// Throws OutOfRange unless 1 <= k <= qubitCount().
    void tosPosition(std::size_t k);

    /// Applies `gate` with `names` as operands, first name most significant.
    /// With more names than gate.qubits() the leading names act as controls:
    /// the gate fires only where all of them are 1.
    void applyGate(const Gate& gate, std::span<const QubitName> names);
    void applyGate(const Gate& gate, std::initializer_list<QubitName> names);

    /// Positional form: applies `gate` to the top gate.qubits() qubits as they
    /// currently sit on the stack. Throws GateTooLarge.
    void applyGateTop(const Gate& gate);

    /// Moves `name` to the top and returns its normalized outcome
    /// probabilities. The state is otherwise unchanged.
    ProbabilityPair probQubit(const QubitName& name);

    /// Samples `name`, collapses the state onto the outcome and pops the qubit.
    int measureQubit(const QubitName& name);

    std::span<const Complex> amplitudes() const noexcept { return amplitudes_; }
    Amplitudes asVector() const { return amplitudes_; }
    const std::vector<QubitName>& names() const noexcept { return names_; }
    std::size_t qubitCount() const noexcept { return names_.size(); }
    bool contains(const QubitName& name) const;
    bool empty() const noexcept { return names_.empty(); }
    double normSquared() const;
    const Backend& backend() const noexcept { return *backend_; }

private:
    std::size_t depthOf(const QubitName& name) const;
    void swapToTop(std::size_t k);
    void checkNorm() const;

    Amplitudes amplitudes_{Complex{1.0, 0.0}};
    Amplitudes scratch_;
    std::vector<QubitName> names_;
    std::mt19937_64 rng_;
    std::shared_ptr<const Backend> backend_;
};

/// Empty workspace ([1+0i], no names) with its RNG seeded by `seed`.
Workspace newWorkspace(std::uint64_t seed, const BackendHandle& backend = {});

}  // namespace qstack
