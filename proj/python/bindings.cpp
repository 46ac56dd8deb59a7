#include <pybind11/complex.h>
#include <pybind11/functional.h>
#include <pybind11/numpy.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <cmath>

#include "qstack/backend.hpp"
#include "qstack/error.hpp"
#include "qstack/gates.hpp"
#include "qstack/grover.hpp"
#include "qstack/script.hpp"
#include "qstack/workspace.hpp"

namespace py = pybind11;
using namespace qstack;

namespace {

BackendHandle handleFor(const std::string& name, unsigned workers) {
    return {parseBackendKind(name), workers};
}

Gate gateFromArray(const py::array_t<Complex, py::array::c_style | py::array::forcecast>& a) {
    if (a.ndim() != 2) throw Error(ErrorCode::BadShape, "gate matrix must be two-dimensional");
    if (a.shape(0) != a.shape(1)) throw Error(ErrorCode::BadShape, "gate matrix must be square");
    return Gate(std::vector<Complex>(a.data(), a.data() + a.size()));
}

py::array_t<Complex> gateToArray(const Gate& g) {
    const auto n = static_cast<py::ssize_t>(g.dim());
    constexpr py::ssize_t item = sizeof(Complex);
    return py::array_t<Complex>({n, n}, {n * item, item}, g.data().data());
}

gates::Axis axisFor(const std::string& axis) {
    if (axis == "x" || axis == "X") return gates::Axis::X;
    if (axis == "y" || axis == "Y") return gates::Axis::Y;
    if (axis == "z" || axis == "Z") return gates::Axis::Z;
    throw Error(ErrorCode::InvalidArgument, "axis must be x, y or z");
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Stack-based state-vector simulator";

    auto error = py::register_exception<Error>(m, "Error", PyExc_RuntimeError);
    py::register_exception<ScriptError>(m, "ScriptError", error.ptr());

    py::class_<Gate>(m, "Gate")
        .def(py::init(&gateFromArray), py::arg("matrix"))
        .def_property_readonly("qubits", &Gate::qubits)
        .def_property_readonly("matrix", &gateToArray)
        .def("__matmul__", [](const Gate& a, const Gate& b) { return gates::product(a, b); })
        .def("adjoint", &gates::adjoint)
        .def("is_unitary", &gates::checkUnitary, py::arg("tol") = 1e-12);

    py::class_<Workspace>(m, "Workspace")
        .def(py::init([](std::uint64_t seed, const std::string& backend, unsigned workers) {
                 return Workspace(seed, handleFor(backend, workers));
             }),
             py::arg("seed") = 0, py::arg("backend") = "optimized", py::arg("workers") = 0)
        .def(
            "push",
            [](Workspace& ws, const QubitName& name, Complex w0, Complex w1) { ws.pushQubit(name, {w0, w1}); },
            py::arg("name"), py::arg("w0") = Complex{1.0, 0.0}, py::arg("w1") = Complex{0.0, 0.0})
        .def("tos", &Workspace::tosQubit, py::arg("name"))
        .def(
            "apply",
            [](Workspace& ws, const Gate& g, const std::vector<QubitName>& names) { ws.applyGate(g, names); },
            py::arg("gate"), py::arg("names"))
        .def("apply_top", &Workspace::applyGateTop, py::arg("gate"))
        .def(
            "prob",
            [](Workspace& ws, const QubitName& name) {
                const auto p = ws.probQubit(name);
                return py::make_tuple(p.p0, p.p1);
            },
            py::arg("name"))
        .def("measure", &Workspace::measureQubit, py::arg("name"))
        .def_property_readonly("names", &Workspace::names)
        .def_property_readonly("amplitudes",
                               [](const Workspace& ws) {
                                   const auto amps = ws.amplitudes();
                                   const auto n = static_cast<py::ssize_t>(amps.size());
                                   return py::array_t<Complex>({n}, {py::ssize_t{sizeof(Complex)}}, amps.data());
                               })
        .def("norm_squared", &Workspace::normSquared)
        .def("__contains__", &Workspace::contains)
        .def("__len__", &Workspace::qubitCount);

    auto g = m.def_submodule("gates", "Gate constructors and gate-level circuits");
    g.def(
        "builtin",
        [](const std::string& name) {
            const auto kind = gates::builtinFromName(name);
            if (!kind) throw Error(ErrorCode::UnknownGate, "unknown gate '" + name + "'");
            return gates::builtin(*kind);
        },
        py::arg("name"));
    g.def("parse", [](const std::string& spec) {
        auto gate = cli::resolveGateSpec(spec);
        if (!gate) throw Error(ErrorCode::UnknownGate, "unknown gate '" + spec + "'");
        return *gate;
    });
    g.def("phase", &gates::phase, py::arg("phi"));
    g.def(
        "rotation", [](const std::string& axis, double theta) { return gates::rotation(axisFor(axis), theta); },
        py::arg("axis"), py::arg("theta"));
    g.def("controlled", &gates::controlled, py::arg("base"), py::arg("controls"));
    g.def("toff_equiv", &gates::toffEquivCircuit, py::arg("ws"), py::arg("q1"), py::arg("q2"), py::arg("q3"));
    g.def(
        "toffn",
        [](Workspace& ws, const std::vector<QubitName>& controls, const QubitName& result) {
            gates::toffnAncilla(ws, controls, result);
        },
        py::arg("ws"), py::arg("controls"), py::arg("result"));

    auto gr = m.def_submodule("grover", "Grover search");
    gr.def("iterations", &grover::planIterations, py::arg("n"));
    gr.def(
        "search",
        [](Workspace& ws, std::size_t n, const std::set<std::size_t>& flips,
           const std::function<void(std::size_t, double, double)>& on_round) {
            grover::ProbabilitySink sink;
            if (on_round) sink = [&](std::size_t r, const ProbabilityPair& p) { on_round(r, p.p0, p.p1); };
            return grover::groverSearch(ws, grover::makePlan(n, flips), sink);
        },
        py::arg("ws"), py::arg("n"), py::arg("flips") = std::set<std::size_t>{1}, py::arg("on_round") = nullptr);
    gr.def(
        "amplify",
        [](Workspace& ws, std::size_t n, const std::set<std::size_t>& flips) {
            return grover::amplify(ws, grover::makePlan(n, flips));
        },
        py::arg("ws"), py::arg("n"), py::arg("flips") = std::set<std::size_t>{1});
    gr.def("expected", [](std::size_t n, const std::set<std::size_t>& flips) {
        return grover::expectedResult(grover::makePlan(n, flips));
    });

    m.def(
        "run_script",
        [](const std::string& text, std::uint64_t seed, const std::string& backend) {
            return cli::runScript(cli::parseScript(text), seed, handleFor(backend, 0));
        },
        py::arg("text"), py::arg("seed") = 0, py::arg("backend") = "optimized");
    m.def(
        "check_script", [](const std::string& text) { cli::parseScript(text); }, py::arg("text"));
}
