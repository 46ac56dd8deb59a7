#include "qstack/backend.hpp"

#include <bit>
#include <string>

#include "backend_impl.hpp"
#include "qstack/error.hpp"

namespace qstack {

std::string_view to_string(BackendKind kind) noexcept {
    switch (kind) {
        case BackendKind::Reference: return "reference";
        case BackendKind::Optimized: return "optimized";
    }
    return "unknown";
}

BackendKind parseBackendKind(std::string_view text) {
    if (text == "reference") return BackendKind::Reference;
    if (text == "optimized") return BackendKind::Optimized;
    throw Error(ErrorCode::InvalidArgument, "unknown backend '" + std::string(text) + "'");
}

void Backend::kronExpand(std::span<const Complex> in, const QubitWeights& w, std::span<Complex> out) const {
    if (in.empty() || out.size() != 2 * in.size()) {
        throw Error(ErrorCode::ShapeMismatch, "kronExpand needs a non-empty input and an output twice its length");
    }
    doKronExpand(in, w, out);
}

Amplitudes Backend::kronExpand(std::span<const Complex> in, const QubitWeights& w) const {
    Amplitudes out(2 * in.size());
    kronExpand(in, w, out);
    return out;
}

void Backend::suffixMatmulInPlace(std::span<Complex> buf, std::size_t cols, const Gate& gate) const {
    if (cols == 0 || !std::has_single_bit(cols) || gate.dim() > cols || buf.size() % cols != 0) {
        throw Error(ErrorCode::ShapeMismatch, "suffixMatmulInPlace: " + std::to_string(buf.size()) +
                                                  " entries cannot be viewed with " + std::to_string(cols) +
                                                  " columns for a gate of dimension " +
                                                  std::to_string(gate.dim()));
    }
    doSuffixMatmul(buf, cols, gate);
}

void Backend::middleAxisSwap(std::span<const Complex> in, std::size_t outer, std::size_t inner,
                             std::span<Complex> out) const {
    if (in.size() != outer * 2 * inner || out.size() != in.size()) {
        throw Error(ErrorCode::ShapeMismatch, "middleAxisSwap: buffer length does not match (outer, 2, inner)");
    }
    doMiddleAxisSwap(in, outer, inner, out);
}

ProbabilityPair Backend::columnNormsSquared(std::span<const Complex> buf) const {
    if (buf.size() % 2 != 0) {
        throw Error(ErrorCode::ShapeMismatch, "columnNormsSquared needs an even-length buffer");
    }
    return doColumnNorms(buf);
}

std::shared_ptr<const Backend> makeBackend(const BackendHandle& handle) {
    switch (handle.kind) {
        case BackendKind::Reference: return std::make_shared<detail::ReferenceBackend>();
        case BackendKind::Optimized: return std::make_shared<detail::OptimizedBackend>(handle.worker_budget);
    }
    throw Error(ErrorCode::InvalidArgument, "unknown backend kind");
}

}  // namespace qstack
