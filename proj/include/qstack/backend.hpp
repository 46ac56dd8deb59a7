#pragma once

#include <cstddef>
#include <memory>
#include <span>
#include <string_view>

#include "qstack/types.hpp"

namespace qstack {

enum class BackendKind { Reference, Optimized };

std::string_view to_string(BackendKind kind) noexcept;
/// Accepts "reference" or "optimized". Throws InvalidArgument otherwise.
BackendKind parseBackendKind(std::string_view text);

struct BackendHandle {
    BackendKind kind = BackendKind::Optimized;
    /// Worker threads for the optimized backend; 0 selects hardware concurrency.
    unsigned worker_budget = 0;
};

/// The four dense kernels the simulator is built from.
///
/// Public entry points validate shapes and then dispatch to the
/// implementation. Every call is synchronous: all writes are visible when it
/// returns, and buffers are borrowed only for the duration of the call.
class Backend {
public:
    virtual ~Backend() = default;

    virtual BackendKind kind() const noexcept = 0;

    /// out[2i] = in[i] * w.w0, out[2i+1] = in[i] * w.w1.
    void kronExpand(std::span<const Complex> in, const QubitWeights& w, std::span<Complex> out) const;
    Amplitudes kronExpand(std::span<const Complex> in, const QubitWeights& w) const;

    /// Views `buf` as a row-major (rows, cols) matrix and replaces the last
    /// gate.dim() entries r of every row with r * transpose(gate).
    void suffixMatmulInPlace(std::span<Complex> buf, std::size_t cols, const Gate& gate) const;

    /// Views `in` as (outer, 2, inner) and writes the (outer, inner, 2)
    /// transpose to `out`: out[a*2B + b*2 + i] = in[a*2B + i*B + b].
    void middleAxisSwap(std::span<const Complex> in, std::size_t outer, std::size_t inner,
                        std::span<Complex> out) const;

    /// Views `buf` as (rows, 2) and returns the squared norm of each column.
    ProbabilityPair columnNormsSquared(std::span<const Complex> buf) const;

protected:
    virtual void doKronExpand(std::span<const Complex> in, const QubitWeights& w,
                              std::span<Complex> out) const = 0;
    virtual void doSuffixMatmul(std::span<Complex> buf, std::size_t cols, const Gate& gate) const = 0;
    virtual void doMiddleAxisSwap(std::span<const Complex> in, std::size_t outer, std::size_t inner,
                                  std::span<Complex> out) const = 0;
    virtual ProbabilityPair doColumnNorms(std::span<const Complex> buf) const = 0;
};

std::shared_ptr<const Backend> makeBackend(const BackendHandle& handle = {});

}  // namespace qstack
