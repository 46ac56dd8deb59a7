#pragma once

#include <complex>
#include <cstddef>
#include <span>
#include <string>
#include <vector>

namespace qstack {

using Complex = std::complex<double>;
using Amplitudes = std::vector<Complex>;
using QubitName = std::string;

/// Raw amplitudes for a qubit about to be pushed; normalized on push.
struct QubitWeights {
    Complex w0{1.0, 0.0};
    Complex w1{0.0, 0.0};

    double norm() const;
    /// Returns a unit-norm copy. Throws ZeroWeights when norm() <= 1e-12.
    QubitWeights normalized() const;
};

/// Probability of a qubit reading 0 and 1.
struct ProbabilityPair {
    double p0 = 0.0;
    double p1 = 0.0;
};

/// A 2^m x 2^m matrix stored row-major.
class Gate {
public:
    /// Throws BadShape unless `matrix` is square with power-of-two side >= 2.
    explicit Gate(std::vector<Complex> matrix);

    int qubits() const noexcept { return qubits_; }
    std::size_t dim() const noexcept { return dim_; }
    Complex operator()(std::size_t row, std::size_t col) const { return matrix_[row * dim_ + col]; }
    std::span<const Complex> data() const noexcept { return matrix_; }

private:
    int qubits_ = 0;
    std::size_t dim_ = 0;
    std::vector<Complex> matrix_;
};

}  // namespace qstack
