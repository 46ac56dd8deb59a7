#include "qstack/types.hpp"

#include <bit>
#include <cmath>

#include "qstack/error.hpp"

namespace qstack {

double QubitWeights::norm() const { return std::sqrt(std::norm(w0) + std::norm(w1)); }

QubitWeights QubitWeights::normalized() const {
    const double n = norm();
    if (!(n > 1e-12)) {
        throw Error(ErrorCode::ZeroWeights, "qubit weights have norm <= 1e-12");
    }
    return {w0 / n, w1 / n};
}

Gate::Gate(std::vector<Complex> matrix) : matrix_(std::move(matrix)) {
    const auto side = static_cast<std::size_t>(std::llround(std::sqrt(static_cast<double>(matrix_.size()))));
    if (side < 2 || side * side != matrix_.size() || !std::has_single_bit(side)) {
        throw Error(ErrorCode::BadShape, "gate matrix must be square with a power-of-two side >= 2 (got " +
                                             std::to_string(matrix_.size()) + " entries)");
    }
    dim_ = side;
    qubits_ = std::countr_zero(side);
}

}  // namespace qstack
