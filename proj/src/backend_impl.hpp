#pragma once

#include "qstack/backend.hpp"

namespace qstack::detail {

/// Direct loops over std::complex, one element at a time.
class ReferenceBackend final : public Backend {
public:
    BackendKind kind() const noexcept override { return BackendKind::Reference; }

protected:
    void doKronExpand(std::span<const Complex> in, const QubitWeights& w, std::span<Complex> out) const override;
    void doSuffixMatmul(std::span<Complex> buf, std::size_t cols, const Gate& gate) const override;
    void doMiddleAxisSwap(std::span<const Complex> in, std::size_t outer, std::size_t inner,
                          std::span<Complex> out) const override;
    ProbabilityPair doColumnNorms(std::span<const Complex> buf) const override;
};

/// Row-parallel kernels with fixed-size gate specializations.
class OptimizedBackend final : public Backend {
public:
    explicit OptimizedBackend(unsigned worker_budget);

    BackendKind kind() const noexcept override { return BackendKind::Optimized; }
    unsigned workers() const noexcept { return workers_; }

protected:
    void doKronExpand(std::span<const Complex> in, const QubitWeights& w, std::span<Complex> out) const override;
    void doSuffixMatmul(std::span<Complex> buf, std::size_t cols, const Gate& gate) const override;
    void doMiddleAxisSwap(std::span<const Complex> in, std::size_t outer, std::size_t inner,
                          std::span<Complex> out) const override;
    ProbabilityPair doColumnNorms(std::span<const Complex> buf) const override;

private:
    unsigned workers_;
};

}  // namespace qstack::detail
