#include "qstack/script.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <sstream>
#include <unordered_set>

#include "qstack/error.hpp"
#include "qstack/gates.hpp"
#include "qstack/grover.hpp"
#include "qstack/workspace.hpp"

namespace qstack::cli {
namespace {

std::optional<double> parseReal(std::string_view text) {
    if (!text.empty() && text.front() == '+') text.remove_prefix(1);
    if (text.empty()) return std::nullopt;
    double value = 0.0;
    const auto [end, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc{} || end != text.data() + text.size() || !std::isfinite(value)) return std::nullopt;
    return value;
}

std::vector<std::string_view> tokenize(std::string_view line) {
    if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    std::vector<std::string_view> tokens;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
        const std::size_t start = i;
        while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i]))) ++i;
        if (i > start) tokens.push_back(line.substr(start, i - start));
    }
    return tokens;
}

// Tracks which names are live while parsing.
class Liveness {
public:
    void use(const QubitName& name, std::size_t line) const {
        if (live_.contains(name)) return;
        if (measured_.contains(name)) {
            throw ScriptError(ErrorCode::UseAfterMeasure, line, "qubit '" + name + "' was already measured");
        }
        throw ScriptError(ErrorCode::UseBeforePush, line, "qubit '" + name + "' used before push");
    }
    void push(const QubitName& name, std::size_t line) {
        if (!live_.insert(name).second) {
            throw ScriptError(ErrorCode::DuplicateName, line, "qubit '" + name + "' is already live");
        }
        measured_.erase(name);
    }
    void measure(const QubitName& name) {
        live_.erase(name);
        measured_.insert(name);
    }

private:
    std::unordered_set<QubitName> live_;
    std::unordered_set<QubitName> measured_;
};

void requireArgs(const std::vector<std::string_view>& tokens, std::size_t count, std::size_t line) {
    if (tokens.size() != count + 1) {
        throw ScriptError(ErrorCode::ArityError, line,
                          "'" + std::string(tokens[0]) + "' takes " + std::to_string(count) + " argument(s), got " +
                              std::to_string(tokens.size() - 1));
    }
}

}  // namespace

std::optional<Complex> parseComplexLiteral(std::string_view text) {
    // The split point is a sign that is neither leading nor part of an exponent.
    std::size_t split = std::string_view::npos;
    for (std::size_t i = 1; i < text.size(); ++i) {
        if ((text[i] == '+' || text[i] == '-') && text[i - 1] != 'e' && text[i - 1] != 'E') {
            split = i;
            break;
        }
    }
    if (split == std::string_view::npos) {
        const auto re = parseReal(text);
        if (!re) return std::nullopt;
        return Complex{*re, 0.0};
    }
    if (text.back() != 'i') return std::nullopt;
    const auto re = parseReal(text.substr(0, split));
    const std::string_view imag = text.substr(split + 1, text.size() - split - 2);
    if (imag.empty() || imag.front() == '+' || imag.front() == '-') return std::nullopt;
    const auto im = parseReal(imag);
    if (!re || !im) return std::nullopt;
    return Complex{*re, text[split] == '-' ? -*im : *im};
}

std::optional<qstack::Gate> resolveGateSpec(std::string_view spec) {
    if (const auto kind = gates::builtinFromName(spec)) return gates::builtin(*kind);
    const auto open = spec.find('(');
    if (open == std::string_view::npos || spec.back() != ')') return std::nullopt;
    const std::string_view head = spec.substr(0, open);
    const auto angle = parseReal(spec.substr(open + 1, spec.size() - open - 2));
    if (!angle) return std::nullopt;
    if (head == "P") return gates::phase(*angle);
    if (head == "Rx") return gates::rotation(gates::Axis::X, *angle);
    if (head == "Ry") return gates::rotation(gates::Axis::Y, *angle);
    if (head == "Rz") return gates::rotation(gates::Axis::Z, *angle);
    return std::nullopt;
}

CircuitScript parseScript(std::string_view text) {
    CircuitScript script;
    Liveness liveness;
    std::size_t line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        const std::size_t eol = std::min(text.find('\n', pos), text.size());
        std::string_view line = text.substr(pos, eol - pos);
        pos = eol + 1;
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
        const auto tokens = tokenize(line);
        if (tokens.empty()) continue;

        Instruction ins;
        ins.line = line_no;
        const std::string_view op = tokens[0];
        if (op == "push") {
            requireArgs(tokens, 3, line_no);
            const auto w0 = parseComplexLiteral(tokens[2]);
            const auto w1 = parseComplexLiteral(tokens[3]);
            if (!w0 || !w1) throw ScriptError(ErrorCode::ParseError, line_no, "malformed complex weight");
            ins.op = OpCode::Push;
            ins.names.emplace_back(tokens[1]);
            ins.weights = {*w0, *w1};
            if (!(ins.weights.norm() > 1e-12)) {
                throw ScriptError(ErrorCode::ZeroWeights, line_no, "push weights must not both be zero");
            }
            liveness.push(ins.names[0], line_no);
        } else if (op == "gate") {
            if (tokens.size() < 2) throw ScriptError(ErrorCode::ArityError, line_no, "'gate' needs a gate spec");
            ins.op = OpCode::Gate;
            ins.gate_spec = std::string(tokens[1]);
            try {
                ins.gate = resolveGateSpec(tokens[1]);
            } catch (const Error& e) {
                throw ScriptError(ErrorCode::ParseError, line_no, e.what());
            }
            if (!ins.gate) throw ScriptError(ErrorCode::UnknownGate, line_no, "unknown gate '" + ins.gate_spec + "'");
            std::unordered_set<std::string_view> seen;
            for (std::size_t i = 2; i < tokens.size(); ++i) {
                if (!seen.insert(tokens[i]).second) {
                    throw ScriptError(ErrorCode::ArityError, line_no,
                                      "qubit '" + std::string(tokens[i]) + "' listed twice");
                }
                ins.names.emplace_back(tokens[i]);
            }
            const auto needed = static_cast<std::size_t>(ins.gate->qubits());
            if (ins.names.size() < needed) {
                throw ScriptError(ErrorCode::ArityError, line_no,
                                  ins.gate_spec + " needs at least " + std::to_string(needed) + " qubit(s), got " +
                                      std::to_string(ins.names.size()));
            }
            for (const auto& name : ins.names) liveness.use(name, line_no);
        } else if (op == "prob" || op == "measure") {
            requireArgs(tokens, 1, line_no);
            ins.op = op == "prob" ? OpCode::Prob : OpCode::Measure;
            ins.names.emplace_back(tokens[1]);
            liveness.use(ins.names[0], line_no);
            if (ins.op == OpCode::Measure) liveness.measure(ins.names[0]);
        } else if (op == "dump") {
            requireArgs(tokens, 0, line_no);
            ins.op = OpCode::Dump;
        } else {
            throw ScriptError(ErrorCode::ParseError, line_no, "unknown instruction '" + std::string(op) + "'");
        }
        script.instructions.push_back(std::move(ins));
    }
    return script;
}

std::string formatReal(double value) {
    if (std::abs(value) < 5e-9) value = 0.0;
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.8f", value);
    return buf;
}

std::string formatComplex(Complex value) {
    std::string im = formatReal(value.imag());
    const bool negative = im.front() == '-';
    return formatReal(value.real()) + (negative ? "-" : "+") + (negative ? im.substr(1) : im) + "i";
}

std::string runScript(const CircuitScript& script, std::uint64_t seed, const BackendHandle& backend) {
    Workspace ws(seed, backend);
    std::ostringstream out;
    for (const auto& ins : script.instructions) {
        try {
            switch (ins.op) {
                case OpCode::Push: ws.pushQubit(ins.names[0], ins.weights); break;
                case OpCode::Gate: ws.applyGate(*ins.gate, ins.names); break;
                case OpCode::Prob: {
                    const auto p = ws.probQubit(ins.names[0]);
                    out << formatReal(p.p0) << ' ' << formatReal(p.p1) << '\n';
                    break;
                }
                case OpCode::Measure: out << ws.measureQubit(ins.names[0]) << '\n'; break;
                case OpCode::Dump: {
                    const auto amps = ws.amplitudes();
                    for (std::size_t i = 0; i < amps.size(); ++i) out << (i ? " " : "") << formatComplex(amps[i]);
                    out << '\n';
                    break;
                }
            }
        } catch (const ScriptError&) {
            throw;
        } catch (const Error& e) {
            throw ScriptError(e.code(), ins.line, e.what());
        }
    }
    return out.str();
}

std::string groverCommand(std::size_t n, const std::set<std::size_t>& flips, std::uint64_t seed,
                          bool show_convergence, const BackendHandle& backend) {
    if (n < 1 || n > kMaxGroverQubits) {
        throw Error(ErrorCode::OutOfRange,
                    "qubit count must be in [1, " + std::to_string(kMaxGroverQubits) + "], got " + std::to_string(n));
    }
    const grover::GroverPlan plan = grover::makePlan(n, flips);
    Workspace ws(seed, backend);
    std::ostringstream out;
    grover::ProbabilitySink sink;
    if (show_convergence) {
        sink = [&out](std::size_t, const ProbabilityPair& p) {
            out << formatReal(p.p0) << ' ' << formatReal(p.p1) << '\n';
        };
    }
    out << grover::groverSearch(ws, plan, sink) << '\n';
    return out.str();
}

}  // namespace qstack::cli
