#include <algorithm>
#include <array>
#include <cstring>
#include <thread>
#include <vector>

#include "backend_impl.hpp"

namespace qstack::detail {
namespace {

// Below this many amplitudes per worker a kernel runs on the calling thread.
constexpr std::size_t kGrain = std::size_t{1} << 15;

// Splits [0, count) into contiguous chunks; body(begin, end, chunk_index).
template <typename Body>
void parallelFor(unsigned workers, std::size_t count, std::size_t work_per_item, Body&& body) {
    const std::size_t total = count * std::max<std::size_t>(work_per_item, 1);
    const std::size_t chunks = std::clamp<std::size_t>(total / kGrain, 1, std::min<std::size_t>(workers, count));
    if (chunks <= 1) {
        body(std::size_t{0}, count, std::size_t{0});
        return;
    }
    const std::size_t step = (count + chunks - 1) / chunks;
    std::vector<std::jthread> pool;
    pool.reserve(chunks - 1);
    for (std::size_t c = 1; c < chunks; ++c) {
        const std::size_t begin = std::min(count, c * step);
        const std::size_t end = std::min(count, begin + step);
        pool.emplace_back([&body, begin, end, c] { body(begin, end, c); });
    }
    body(std::size_t{0}, std::min(count, step), std::size_t{0});
}

// std::complex<double> is layout-compatible with double[2].
inline double* reals(Complex* p) { return reinterpret_cast<double*>(p); }
inline const double* reals(const Complex* p) { return reinterpret_cast<const double*>(p); }

template <std::size_t D>
void fixedSuffixMatmul(Complex* buf, std::size_t rows, std::size_t cols, const Gate& gate) {
    std::array<double, D * D> gre{};
    std::array<double, D * D> gim{};
    for (std::size_t j = 0; j < D; ++j) {
        for (std::size_t k = 0; k < D; ++k) {
            gre[j * D + k] = gate(j, k).real();
            gim[j * D + k] = gate(j, k).imag();
        }
    }
    for (std::size_t r = 0; r < rows; ++r) {
        double* row = reals(buf + r * cols + (cols - D));
        std::array<double, D> xre;
        std::array<double, D> xim;
        for (std::size_t k = 0; k < D; ++k) {
            xre[k] = row[2 * k];
            xim[k] = row[2 * k + 1];
        }
        for (std::size_t j = 0; j < D; ++j) {
            double are = xre[0] * gre[j * D] - xim[0] * gim[j * D];
            double aim = xre[0] * gim[j * D] + xim[0] * gre[j * D];
            for (std::size_t k = 1; k < D; ++k) {
                are += xre[k] * gre[j * D + k] - xim[k] * gim[j * D + k];
                aim += xre[k] * gim[j * D + k] + xim[k] * gre[j * D + k];
            }
            row[2 * j] = are;
            row[2 * j + 1] = aim;
        }
    }
}

void genericSuffixMatmul(Complex* buf, std::size_t rows, std::size_t cols, const Gate& gate) {
    const std::size_t d = gate.dim();
    std::vector<Complex> segment(d);
    for (std::size_t r = 0; r < rows; ++r) {
        Complex* row = buf + r * cols + (cols - d);
        std::copy(row, row + d, segment.begin());
        for (std::size_t j = 0; j < d; ++j) {
            const Complex* g = gate.data().data() + j * d;
            Complex acc = segment[0] * g[0];
            for (std::size_t k = 1; k < d; ++k) acc += segment[k] * g[k];
            row[j] = acc;
        }
    }
}

}  // namespace

OptimizedBackend::OptimizedBackend(unsigned worker_budget)
    : workers_(worker_budget != 0 ? worker_budget : std::max(1U, std::thread::hardware_concurrency())) {}

void OptimizedBackend::doKronExpand(std::span<const Complex> in, const QubitWeights& w,
                                    std::span<Complex> out) const {
    const double w0r = w.w0.real(), w0i = w.w0.imag();
    const double w1r = w.w1.real(), w1i = w.w1.imag();
    const double* src = reals(in.data());
    double* dst = reals(out.data());
    parallelFor(workers_, in.size(), 2, [&](std::size_t begin, std::size_t end, std::size_t) {
        for (std::size_t i = begin; i < end; ++i) {
            const double a = src[2 * i], b = src[2 * i + 1];
            dst[4 * i] = a * w0r - b * w0i;
            dst[4 * i + 1] = a * w0i + b * w0r;
            dst[4 * i + 2] = a * w1r - b * w1i;
            dst[4 * i + 3] = a * w1i + b * w1r;
        }
    });
}

void OptimizedBackend::doSuffixMatmul(std::span<Complex> buf, std::size_t cols, const Gate& gate) const {
    const std::size_t rows = buf.size() / cols;
    const std::size_t d = gate.dim();
    parallelFor(workers_, rows, d, [&](std::size_t begin, std::size_t end, std::size_t) {
        Complex* base = buf.data() + begin * cols;
        const std::size_t n = end - begin;
        switch (d) {
            case 2: fixedSuffixMatmul<2>(base, n, cols, gate); break;
            case 4: fixedSuffixMatmul<4>(base, n, cols, gate); break;
            case 8: fixedSuffixMatmul<8>(base, n, cols, gate); break;
            default: genericSuffixMatmul(base, n, cols, gate); break;
        }
    });
}

void OptimizedBackend::doMiddleAxisSwap(std::span<const Complex> in, std::size_t outer, std::size_t inner,
                                        std::span<Complex> out) const {
    if (inner == 1) {
        std::memcpy(out.data(), in.data(), in.size() * sizeof(Complex));
        return;
    }
    // Flatten (a, b) so small `outer` still spreads across workers.
    parallelFor(workers_, outer * inner, 2, [&](std::size_t begin, std::size_t end, std::size_t) {
        std::size_t a = begin / inner;
        std::size_t b = begin % inner;
        for (std::size_t idx = begin; idx < end;) {
            const Complex* lo = in.data() + a * 2 * inner;
            const Complex* hi = lo + inner;
            Complex* dst = out.data() + a * 2 * inner;
            const std::size_t stop = std::min(inner, b + (end - idx));
            for (std::size_t bb = b; bb < stop; ++bb) {
                dst[2 * bb] = lo[bb];
                dst[2 * bb + 1] = hi[bb];
            }
            idx += stop - b;
            ++a;
            b = 0;
        }
    });
}

ProbabilityPair OptimizedBackend::doColumnNorms(std::span<const Complex> buf) const {
    const std::size_t rows = buf.size() / 2;
    std::vector<ProbabilityPair> partial(std::max(1U, workers_));
    const double* src = reals(buf.data());
    parallelFor(workers_, rows, 2, [&](std::size_t begin, std::size_t end, std::size_t chunk) {
        double s0 = 0.0, s1 = 0.0;
        for (std::size_t r = begin; r < end; ++r) {
            s0 += src[4 * r] * src[4 * r] + src[4 * r + 1] * src[4 * r + 1];
            s1 += src[4 * r + 2] * src[4 * r + 2] + src[4 * r + 3] * src[4 * r + 3];
        }
        partial[chunk] = {s0, s1};
    });
    ProbabilityPair sums;
    for (const auto& p : partial) {
        sums.p0 += p.p0;
        sums.p1 += p.p1;
    }
    return sums;
}

}  // namespace qstack::detail
