#include <random>

#include "dense_oracle.hpp"
#include "doctest.h"
#include "qstack/backend.hpp"
#include "qstack/error.hpp"
#include "qstack/gates.hpp"

using namespace qstack;
using qstack::testing::maxDiff;
using qstack::testing::randomVector;

namespace {

const BackendHandle kBoth[] = {{BackendKind::Reference, 1}, {BackendKind::Optimized, 1}, {BackendKind::Optimized, 4}};

}  // namespace

TEST_CASE("kronExpand interleaves the new qubit as the least significant bit") {
    for (const auto& handle : kBoth) {
        const auto be = makeBackend(handle);
        const std::string backend_name(to_string(be->kind()));
        CAPTURE(backend_name);
        const Amplitudes one{1.0};
        const Amplitudes out = be->kronExpand(one, {0.6, 0.8});
        CHECK(maxDiff(out, Amplitudes{0.6, 0.8}) == 0.0);

        const Complex a{1, 2}, b{-1, 0.5}, c{0.25, 0}, d{0, -3};
        const Complex alpha{0.6, 0.1}, beta{-0.2, 0.8};
        const Amplitudes v{a, b, c, d};
        const Amplitudes expected{a * alpha, a * beta, b * alpha, b * beta, c * alpha, c * beta, d * alpha, d * beta};
        CHECK(maxDiff(be->kronExpand(v, {alpha, beta}), expected) == 0.0);

        const Amplitudes zeros = be->kronExpand(v, {1.0, 0.0});
        for (std::size_t i = 0; i < v.size(); ++i) {
            CHECK(zeros[2 * i] == v[i]);
            CHECK(zeros[2 * i + 1] == Complex{});
        }
    }
}

TEST_CASE("suffixMatmulInPlace") {
    for (const auto& handle : kBoth) {
        const auto be = makeBackend(handle);
        const std::string backend_name(to_string(be->kind()));
        CAPTURE(backend_name);

        SUBCASE("identity over the whole row leaves the buffer alone") {
            std::mt19937_64 rng(3);
            Amplitudes buf = randomVector(rng, 16);
            const Amplitudes before = buf;
            be->suffixMatmulInPlace(buf, 16, gates::identity(4));
            CHECK(maxDiff(buf, before) == 0.0);
        }

        SUBCASE("X on a single zero qubit") {
            Amplitudes buf{1.0, 0.0};
            be->suffixMatmulInPlace(buf, 2, gates::builtin(gates::Builtin::X));
            CHECK(maxDiff(buf, Amplitudes{0.0, 1.0}) == 0.0);
        }

        SUBCASE("suffix X on 16 columns equals the dense controlled-X") {
            std::mt19937_64 rng(11);
            Amplitudes buf = randomVector(rng, 16);
            const std::vector<QubitName> order{"a", "b", "c", "d"};
            const auto dense = testing::denseOperator(gates::builtin(gates::Builtin::X), order, order);
            const Amplitudes expected = testing::apply(dense, buf);
            be->suffixMatmulInPlace(buf, 16, gates::builtin(gates::Builtin::X));
            CHECK(maxDiff(buf, expected) <= 1e-12);
        }

        SUBCASE("only the designated suffix columns are written") {
            std::mt19937_64 rng(5);
            const Complex canary{1234.5, -678.25};
            for (int m = 1; m <= 3; ++m) {
                const std::size_t cols = 16, d = std::size_t{1} << m, rows = 8;
                Amplitudes buf(rows * cols, canary);
                for (std::size_t r = 0; r < rows; ++r) {
                    const auto seg = randomVector(rng, d);
                    std::copy(seg.begin(), seg.end(), buf.begin() + static_cast<long>(r * cols + cols - d));
                }
                be->suffixMatmulInPlace(buf, cols, testing::randomUnitary(rng, m));
                for (std::size_t r = 0; r < rows; ++r) {
                    for (std::size_t c = 0; c < cols - d; ++c) CHECK(buf[r * cols + c] == canary);
                }
            }
        }
    }
}

TEST_CASE("middleAxisSwap") {
    for (const auto& handle : kBoth) {
        const auto be = makeBackend(handle);
        const std::string backend_name(to_string(be->kind()));
        CAPTURE(backend_name);
        std::mt19937_64 rng(17);

        Amplitudes in = randomVector(rng, 8);
        Amplitudes out(8);
        be->middleAxisSwap(in, 4, 1, out);
        CHECK(maxDiff(in, out) == 0.0);

        const Amplitudes input{0.6, 0.8, 0.0, 0.0};
        Amplitudes swapped(4);
        be->middleAxisSwap(input, 1, 2, swapped);
        CHECK(maxDiff(swapped, Amplitudes{0.6, 0.0, 0.8, 0.0}) == 0.0);

        // (A, 2, 2) is its own inverse; larger shapes cycle after k moves.
        Amplitudes back(4);
        be->middleAxisSwap(swapped, 1, 2, back);
        CHECK(maxDiff(back, input) == 0.0);

        for (std::size_t k = 2; k <= 5; ++k) {
            const std::size_t inner = std::size_t{1} << (k - 1);
            const std::size_t outer = 2;
            Amplitudes state = randomVector(rng, outer * 2 * inner);
            const Amplitudes original = state;
            Amplitudes tmp(state.size());
            for (std::size_t rep = 0; rep < k; ++rep) {
                be->middleAxisSwap(state, outer, inner, tmp);
                state.swap(tmp);
                if (rep + 1 < k) CHECK(maxDiff(state, original) > 0.0);
            }
            CHECK(maxDiff(state, original) == 0.0);
        }

        // Index contract on a large, multi-chunk shape.
        const std::size_t outer = 8, inner = 1 << 13;
        Amplitudes big(outer * 2 * inner);
        for (std::size_t i = 0; i < big.size(); ++i) big[i] = static_cast<double>(i);
        Amplitudes bigOut(big.size());
        be->middleAxisSwap(big, outer, inner, bigOut);
        bool ok = true;
        for (std::size_t a = 0; a < outer; ++a)
            for (std::size_t b = 0; b < inner; ++b)
                for (std::size_t i = 0; i < 2; ++i)
                    ok = ok && bigOut[a * 2 * inner + b * 2 + i] == big[a * 2 * inner + i * inner + b];
        CHECK(ok);
    }
}

TEST_CASE("columnNormsSquared") {
    for (const auto& handle : kBoth) {
        const auto be = makeBackend(handle);
        const std::string backend_name(to_string(be->kind()));
        CAPTURE(backend_name);
        const auto p = be->columnNormsSquared(Amplitudes{0.6, 0.8});
        CHECK(p.p0 == doctest::Approx(0.36).epsilon(1e-15));
        CHECK(p.p1 == doctest::Approx(0.64).epsilon(1e-15));

        std::mt19937_64 rng(23);
        for (std::size_t size : {2UL, 64UL, 1UL << 17}) {
            const Amplitudes unit = randomVector(rng, size);
            const auto s = be->columnNormsSquared(unit);
            CHECK(std::abs(s.p0 + s.p1 - 1.0) <= 1e-12);

            const Amplitudes raw = randomVector(rng, size, false);
            double n0 = 0.0, n1 = 0.0;
            for (std::size_t i = 0; i < size; i += 2) {
                n0 += raw[i].real() * raw[i].real() + raw[i].imag() * raw[i].imag();
                n1 += raw[i + 1].real() * raw[i + 1].real() + raw[i + 1].imag() * raw[i + 1].imag();
            }
            const auto r = be->columnNormsSquared(raw);
            CHECK(std::abs(r.p0 - n0) <= 1e-13 * std::max(1.0, n0));
            CHECK(std::abs(r.p1 - n1) <= 1e-13 * std::max(1.0, n1));
        }
    }
}

TEST_CASE("reference and optimized backends agree on random inputs") {
    const auto ref = makeBackend({BackendKind::Reference});
    const auto opt = makeBackend({BackendKind::Optimized, 4});
    std::mt19937_64 rng(99);
    for (int trial = 0; trial < 40; ++trial) {
        const std::size_t n = 1 + static_cast<std::size_t>(trial % 17);
        const std::size_t size = std::size_t{1} << n;
        const Amplitudes v = randomVector(rng, size);
        const auto w = randomVector(rng, 2);

        CHECK(maxDiff(ref->kronExpand(v, {w[0], w[1]}), opt->kronExpand(v, {w[0], w[1]})) <= 1e-12);

        const int m = 1 + static_cast<int>(rng() % std::min<std::size_t>(n, 4));
        const std::size_t cols = std::size_t{1} << (m + static_cast<int>(rng() % (n - m + 1)));
        const Gate g = testing::randomUnitary(rng, m);
        Amplitudes a = v, b = v;
        ref->suffixMatmulInPlace(a, cols, g);
        opt->suffixMatmulInPlace(b, cols, g);
        CHECK(maxDiff(a, b) <= 1e-12);

        const std::size_t k = 1 + rng() % n;
        const std::size_t inner = std::size_t{1} << (k - 1), outer = size >> k;
        Amplitudes sa(size), sb(size);
        ref->middleAxisSwap(v, outer, inner, sa);
        opt->middleAxisSwap(v, outer, inner, sb);
        CHECK(maxDiff(sa, sb) == 0.0);

        const auto pa = ref->columnNormsSquared(v);
        const auto pb = opt->columnNormsSquared(v);
        CHECK(std::abs(pa.p0 - pb.p0) <= 1e-12);
        CHECK(std::abs(pa.p1 - pb.p1) <= 1e-12);
    }
}

TEST_CASE("kernels reject inconsistent shapes") {
    const auto be = makeBackend();
    Amplitudes buf(8);
    Amplitudes out(6);
    CHECK_THROWS_AS(be->kronExpand(Amplitudes{}, {1.0, 0.0}), Error);
    CHECK_THROWS_AS(be->kronExpand(buf, {1.0, 0.0}, out), Error);
    CHECK_THROWS_AS(be->suffixMatmulInPlace(buf, 3, gates::builtin(gates::Builtin::X)), Error);
    CHECK_THROWS_AS(be->suffixMatmulInPlace(buf, 2, gates::builtin(gates::Builtin::CNOT)), Error);
    CHECK_THROWS_AS(be->middleAxisSwap(buf, 3, 2, buf), Error);
    CHECK_THROWS_AS(be->columnNormsSquared(Amplitudes(3)), Error);
    try {
        be->columnNormsSquared(Amplitudes(5));
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::ShapeMismatch);
    }
    CHECK(parseBackendKind("reference") == BackendKind::Reference);
    CHECK_THROWS_AS(parseBackendKind("gpu"), Error);
}
