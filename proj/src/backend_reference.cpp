#include <vector>

#include "backend_impl.hpp"

namespace qstack::detail {

void ReferenceBackend::doKronExpand(std::span<const Complex> in, const QubitWeights& w,
                                    std::span<Complex> out) const {
    for (std::size_t i = 0; i < in.size(); ++i) {
        out[2 * i] = in[i] * w.w0;
        out[2 * i + 1] = in[i] * w.w1;
    }
}

void ReferenceBackend::doSuffixMatmul(std::span<Complex> buf, std::size_t cols, const Gate& gate) const {
    const std::size_t d = gate.dim();
    const std::size_t rows = buf.size() / cols;
    std::vector<Complex> segment(d);
    for (std::size_t r = 0; r < rows; ++r) {
        Complex* row = buf.data() + r * cols + (cols - d);
        for (std::size_t k = 0; k < d; ++k) segment[k] = row[k];
        for (std::size_t j = 0; j < d; ++j) {
            Complex acc{0.0, 0.0};
            for (std::size_t k = 0; k < d; ++k) acc += segment[k] * gate(j, k);
            row[j] = acc;
        }
    }
}

void ReferenceBackend::doMiddleAxisSwap(std::span<const Complex> in, std::size_t outer, std::size_t inner,
                                        std::span<Complex> out) const {
    for (std::size_t a = 0; a < outer; ++a) {
        for (std::size_t b = 0; b < inner; ++b) {
            for (std::size_t i = 0; i < 2; ++i) {
                out[a * 2 * inner + b * 2 + i] = in[a * 2 * inner + i * inner + b];
            }
        }
    }
}

ProbabilityPair ReferenceBackend::doColumnNorms(std::span<const Complex> buf) const {
    ProbabilityPair sums;
    for (std::size_t r = 0; r < buf.size() / 2; ++r) {
        sums.p0 += std::norm(buf[2 * r]);
        sums.p1 += std::norm(buf[2 * r + 1]);
    }
    return sums;
}

}  // namespace qstack::detail
