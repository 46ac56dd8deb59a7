#include <numbers>
#include <random>

#include "dense_oracle.hpp"
#include "doctest.h"
#include "qstack/error.hpp"
#include "qstack/gates.hpp"
#include "qstack/grover.hpp"

using namespace qstack;
using gates::Builtin;
using gates::builtin;
using gates::maxAbsDiff;
using gates::product;
using qstack::testing::maxDiff;

namespace {

constexpr double kPi = std::numbers::pi;

const Builtin kAll[] = {Builtin::X, Builtin::Y,    Builtin::Z,    Builtin::H,  Builtin::S,    Builtin::T,
                        Builtin::Tinv, Builtin::CNOT, Builtin::CZ, Builtin::SWAP, Builtin::TOFF};

// Basis state |b1 b2 b3> on q1, q2, q3 (q1 pushed first).
Workspace basis(unsigned bits, std::size_t n, std::uint64_t seed = 0) {
    Workspace ws(seed);
    for (std::size_t i = 0; i < n; ++i) {
        const bool one = (bits >> (n - 1 - i)) & 1U;
        ws.pushQubit("q" + std::to_string(i + 1), one ? QubitWeights{0.0, 1.0} : QubitWeights{1.0, 0.0});
    }
    return ws;
}

}  // namespace

TEST_CASE("builtin matrices") {
    const Gate& x = builtin(Builtin::X);
    CHECK(x(0, 0) == 0.0);
    CHECK(x(0, 1) == 1.0);
    CHECK(x(1, 0) == 1.0);
    CHECK(x(1, 1) == 0.0);
    CHECK(maxAbsDiff(product(builtin(Builtin::H), builtin(Builtin::H)), gates::identity(1)) <= 1e-15);
    CHECK(maxAbsDiff(product(builtin(Builtin::T), builtin(Builtin::T)), builtin(Builtin::S)) <= 1e-15);
    CHECK(maxAbsDiff(product(builtin(Builtin::S), builtin(Builtin::S)), builtin(Builtin::Z)) <= 1e-15);
    CHECK(builtin(Builtin::CNOT).qubits() == 2);
    CHECK(builtin(Builtin::TOFF).qubits() == 3);
    CHECK(builtin(Builtin::TOFF)(6, 7) == 1.0);
    CHECK(builtin(Builtin::TOFF)(7, 6) == 1.0);
    CHECK(builtin(Builtin::CZ)(3, 3) == -1.0);
    for (const auto kind : kAll) {
        const std::string gate_name(gates::to_string(kind));
        CAPTURE(gate_name);
        CHECK(gates::checkUnitary(builtin(kind), 1e-12));
        CHECK(gates::builtinFromName(gates::to_string(kind)) == kind);
    }
    CHECK_FALSE(gates::builtinFromName("CCX").has_value());
}

TEST_CASE("gate identities") {
    const Gate& h = builtin(Builtin::H);
    const Gate& s = builtin(Builtin::S);
    const Gate& z = builtin(Builtin::Z);
    CHECK(maxAbsDiff(product(product(h, builtin(Builtin::X)), h), z) <= 1e-15);
    const Gate shzhzs = product(product(product(product(product(s, h), z), h), z), s);
    CHECK(maxAbsDiff(shzhzs, builtin(Builtin::Y)) <= 1e-15);
    CHECK(maxAbsDiff(product(builtin(Builtin::Tinv), builtin(Builtin::T)), gates::identity(1)) <= 1e-15);
    CHECK(maxAbsDiff(builtin(Builtin::Tinv), gates::adjoint(builtin(Builtin::T))) == 0.0);
}

TEST_CASE("phase gate") {
    CHECK(maxAbsDiff(gates::phase(kPi), builtin(Builtin::Z)) <= 1e-15);
    CHECK(maxAbsDiff(gates::phase(0.0), gates::identity(1)) == 0.0);
    // The builtin T is e^{+i pi/4}, the same convention as P.
    CHECK(maxAbsDiff(gates::phase(kPi / 4), builtin(Builtin::T)) <= 1e-15);
    CHECK(maxAbsDiff(gates::phase(-kPi / 4), builtin(Builtin::Tinv)) <= 1e-15);
    CHECK(maxAbsDiff(gates::phase(kPi / 2), builtin(Builtin::S)) <= 1e-15);
    CHECK_THROWS_AS(gates::phase(std::numeric_limits<double>::infinity()), Error);
    CHECK_THROWS_AS(gates::phase(std::numeric_limits<double>::quiet_NaN()), Error);
}

TEST_CASE("rotation gates") {
    CHECK(maxAbsDiff(gates::rotation(gates::Axis::X, 0.0), gates::identity(1)) == 0.0);
    CHECK(maxAbsDiff(gates::rotation(gates::Axis::Y, kPi), Gate({0, -1, 1, 0})) <= 1e-15);
    // Rz differs from P only by a global phase.
    const Gate rz = gates::rotation(gates::Axis::Z, 0.7);
    CHECK(maxAbsDiff(gates::scaled(rz, std::exp(Complex{0, 0.35})), gates::phase(0.7)) <= 1e-15);

    std::mt19937_64 rng(12);
    std::uniform_real_distribution<double> angle(-4 * kPi, 4 * kPi);
    for (int i = 0; i < 1000; ++i) {
        const double theta = angle(rng);
        for (const auto axis : {gates::Axis::X, gates::Axis::Y, gates::Axis::Z}) {
            CHECK(gates::checkUnitary(gates::rotation(axis, theta), 1e-12));
        }
    }
    try {
        gates::rotation(gates::Axis::X, std::numeric_limits<double>::infinity());
        FAIL("expected NonFinite");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::NonFinite);
    }
}

TEST_CASE("checkUnitary rejects non-unitary matrices") {
    CHECK_FALSE(gates::checkUnitary(Gate({1, 1, 0, 1}), 1e-12));
    CHECK_FALSE(gates::checkUnitary(gates::scaled(builtin(Builtin::H), 2.0), 1e-12));
    CHECK(gates::checkUnitary(gates::scaled(builtin(Builtin::H), std::exp(Complex{0, 1.3})), 1e-12));
}

TEST_CASE("controlled gates") {
    CHECK(maxAbsDiff(gates::controlled(builtin(Builtin::X), 1), builtin(Builtin::CNOT)) == 0.0);
    CHECK(maxAbsDiff(gates::controlled(builtin(Builtin::X), 2), builtin(Builtin::TOFF)) == 0.0);
    CHECK(maxAbsDiff(gates::controlled(builtin(Builtin::Z), 1), builtin(Builtin::CZ)) == 0.0);
    std::mt19937_64 rng(8);
    for (int c = 0; c <= 4; ++c) {
        const Gate g = gates::controlled(testing::randomUnitary(rng, 1 + c % 2), c);
        CHECK(gates::checkUnitary(g, 1e-12));
    }
    CHECK(maxAbsDiff(gates::kron(gates::identity(1), builtin(Builtin::X)),
                     Gate({0, 1, 0, 0, 1, 0, 0, 0, 0, 0, 0, 1, 0, 0, 1, 0})) == 0.0);
}

TEST_CASE("TOFF is self-inverse on random states") {
    std::mt19937_64 rng(4);
    for (int trial = 0; trial < 10; ++trial) {
        Workspace ws = testing::randomWorkspace(rng, 4);
        const Amplitudes before = ws.asVector();
        const auto order = ws.names();
        ws.applyGate(builtin(Builtin::TOFF), {"q3", "q0", "q2"});
        ws.applyGate(builtin(Builtin::TOFF), {"q3", "q0", "q2"});
        CHECK(maxDiff(testing::reorder(ws.amplitudes(), ws.names(), order), before) <= 1e-12);
    }
}

TEST_CASE("15-gate Toffoli circuit") {
    SUBCASE("matches TOFF on every basis state") {
        for (unsigned b = 0; b < 8; ++b) {
            Workspace a = basis(b, 3);
            Workspace ref = basis(b, 3);
            gates::toffEquivCircuit(a, "q1", "q2", "q3");
            ref.applyGate(builtin(Builtin::TOFF), {"q1", "q2", "q3"});
            const auto order = ref.names();
            CHECK(maxDiff(testing::reorder(a.amplitudes(), a.names(), order), ref.amplitudes()) <= 1e-10);
        }
    }
    SUBCASE("composed matrix equals TOFF") {
        // Column j is the image of basis state j, laid out as (q1 q2 q3).
        const std::vector<QubitName> order{"q1", "q2", "q3"};
        std::vector<Complex> m(64);
        for (unsigned col = 0; col < 8; ++col) {
            Workspace ws = basis(col, 3);
            gates::toffEquivCircuit(ws, "q1", "q2", "q3");
            const Amplitudes image = testing::reorder(ws.amplitudes(), ws.names(), order);
            for (unsigned row = 0; row < 8; ++row) m[row * 8 + col] = image[row];
        }
        CHECK(maxAbsDiff(Gate(std::move(m)), builtin(Builtin::TOFF)) <= 1e-10);
    }
    SUBCASE("superposed inputs give AND truth-table rows") {
        Workspace ws(21);
        for (int run = 0; run < 40; ++run) {
            ws.pushQubit("Q1", {1.0, 1.0});
            ws.pushQubit("Q2", {1.0, 1.0});
            ws.pushQubit("Q3", {1.0, 0.0});
            gates::toffEquivCircuit(ws, "Q1", "Q2", "Q3");
            const int q1 = ws.measureQubit("Q1");
            const int q2 = ws.measureQubit("Q2");
            const int q3 = ws.measureQubit("Q3");
            CHECK(q3 == (q1 & q2));
        }
    }
}

TEST_CASE("toffnAncilla") {
    SUBCASE("no controls is a plain X") {
        Workspace ws(0);
        ws.pushQubit("r", {1.0, 0.0});
        gates::toffnAncilla(ws, {}, "r");
        CHECK(maxDiff(ws.amplitudes(), Amplitudes{0.0, 1.0}) == 0.0);
    }
    SUBCASE("three set controls flip the result") {
        Workspace ws = basis(0b1110, 4);
        const std::vector<QubitName> controls{"q1", "q2", "q3"};
        gates::toffnAncilla(ws, controls, "q4");
        CHECK(ws.qubitCount() == 4);
        CHECK(ws.measureQubit("q4") == 1);
    }
    SUBCASE("matches the fast-path multi-controlled X on all basis states") {
        for (std::size_t controls = 1; controls <= 5; ++controls) {
            const std::size_t n = controls + 1;
            std::vector<QubitName> names;
            for (std::size_t i = 1; i <= controls; ++i) names.push_back("q" + std::to_string(i));
            const QubitName result = "q" + std::to_string(n);
            for (unsigned b = 0; b < (1U << n); ++b) {
                Workspace anc = basis(b, n);
                Workspace fast = basis(b, n);
                gates::toffnAncilla(anc, names, result);
                std::vector<QubitName> ops = names;
                ops.push_back(result);
                fast.applyGate(builtin(Builtin::X), ops);
                CHECK(anc.qubitCount() == n);
                const auto order = fast.names();
                CHECK(maxDiff(testing::reorder(anc.amplitudes(), anc.names(), order), fast.amplitudes()) <= 1e-12);
            }
        }
    }
    SUBCASE("superposed controls: AND truth table and no leaked ancillas") {
        Workspace ws(3);
        for (int run = 0; run < 30; ++run) {
            for (const char* q : {"Q1", "Q2", "Q3"}) ws.pushQubit(q, {1.0, 1.0});
            ws.pushQubit("Q4", {1.0, 0.0});
            const std::vector<QubitName> controls{"Q1", "Q2", "Q3"};
            gates::toffnAncilla(ws, controls, "Q4");
            CHECK(ws.qubitCount() == 4);
            const int q1 = ws.measureQubit("Q1"), q2 = ws.measureQubit("Q2");
            const int q3 = ws.measureQubit("Q3"), q4 = ws.measureQubit("Q4");
            CHECK(q4 == (q1 & q2 & q3));
        }
    }
    SUBCASE("a user qubit named temp0 is not reused as an ancilla") {
        Workspace ws(0);
        ws.pushQubit("temp0", {0.0, 1.0});
        ws.pushQubit("a", {0.0, 1.0});
        ws.pushQubit("b", {0.0, 1.0});
        ws.pushQubit("r", {1.0, 0.0});
        const std::vector<QubitName> controls{"temp0", "a", "b"};
        gates::toffnAncilla(ws, controls, "r");
        CHECK(ws.names().size() == 4);
        CHECK(ws.measureQubit("r") == 1);
        CHECK(ws.measureQubit("temp0") == 1);
    }
    SUBCASE("argument errors") {
        Workspace ws = basis(0, 3);
        const std::vector<QubitName> dup{"q1", "q1"};
        CHECK_THROWS_AS(gates::toffnAncilla(ws, dup, "q3"), Error);
        const std::vector<QubitName> self{"q1", "q3"};
        CHECK_THROWS_AS(gates::toffnAncilla(ws, self, "q3"), Error);
        const std::vector<QubitName> missing{"q1", "nope"};
        CHECK_THROWS_AS(gates::toffnAncilla(ws, missing, "q3"), Error);
        CHECK(ws.qubitCount() == 3);
    }
}
