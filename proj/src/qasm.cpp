// Copyright 2026 The encconv Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "encconv/qasm.hpp"

#include <cctype>
#include <charconv>
#include <optional>
#include <regex>
#include <sstream>
#include <vector>

namespace encconv {

namespace {

std::string format_angle(double v) {
    char buf[64];
    auto res = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, res.ptr);
}

bool emittable(GateKind k) {
    return k != GateKind::CRY && k != GateKind::CCRY && k != GateKind::MCX;
}

void write_gate(std::ostringstream& os, const Gate& g) {
    os << gate_name(g.kind());
    switch (g.kind()) {
        case GateKind::RY:
        case GateKind::Phase:
        case GateKind::CPhase:
            os << '(' << format_angle(g.angle()) << ')';
            break;
        default:
            break;
    }
    os << ' ';
    bool first = true;
    for (int q : g.qubits()) {
        if (!first) os << ',';
        os << "q[" << q << ']';
        first = false;
    }
    os << ";\n";
}

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

double parse_angle(std::string_view s, int line) {
    double v = 0;
    auto res = std::from_chars(s.data(), s.data() + s.size(), v);
    if (res.ec != std::errc() || res.ptr != s.data() + s.size()) {
        throw ParseError(line, "bad angle '" + std::string(s) + "'");
    }
    return v;
}

}  // namespace

ParseError::ParseError(int l, const std::string& what)
    : std::runtime_error("line " + std::to_string(l) + ": " + what), line(l) {}

std::string emit_text(const Circuit& c) {
    std::ostringstream os;
    os << "OPENQASM 2.0;\n";
    os << "include \"qelib1.inc\";\n";
    if (!c.label().empty()) os << "// " << c.label() << '\n';
    os << "qreg q[" << c.num_qubits() << "];\n";
    for (const Gate& g : c) {
        if (emittable(g.kind())) {
            write_gate(os, g);
        } else {
            Circuit one(c.num_qubits());
            one.add(g);
            for (const Gate& lowered : decompose_to_basis(one)) write_gate(os, lowered);
        }
    }
    return os.str();
}

Circuit parse_text(std::string_view text) {
    static const std::regex gate_re(R"(^([a-z0-9]+)(?:\(([^)]*)\))?\s+(q\[\d+\](?:\s*,\s*q\[\d+\])*)\s*;$)");
    static const std::regex qreg_re(R"(^qreg\s+q\[(\d+)\]\s*;$)");
    static const std::regex operand_re(R"(q\[(\d+)\])");

    std::optional<Circuit> circuit;
    std::string label;
    bool header = false;
    int lineno = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t nl = text.find('\n', pos);
        if (nl == std::string_view::npos) nl = text.size();
        const std::string line(trim(text.substr(pos, nl - pos)));
        pos = nl + 1;
        ++lineno;
        if (line.empty()) continue;
        if (line.starts_with("//")) {
            if (!circuit && label.empty()) label = std::string(trim(std::string_view(line).substr(2)));
            continue;
        }
        if (!header) {
            if (line != "OPENQASM 2.0;") throw ParseError(lineno, "expected 'OPENQASM 2.0;'");
            header = true;
            continue;
        }
        if (line.starts_with("include")) continue;
        std::smatch m;
        if (std::regex_match(line, m, qreg_re)) {
            if (circuit) throw ParseError(lineno, "only one register is supported");
            circuit.emplace(std::stoi(m[1].str()), label);
            continue;
        }
        if (!std::regex_match(line, m, gate_re)) throw ParseError(lineno, "unrecognised statement '" + line + "'");
        if (!circuit) throw ParseError(lineno, "gate before qreg");

        const std::string name = m[1].str();
        const bool has_param = m[2].matched;
        std::vector<int> qs;
        const std::string operands = m[3].str();
        for (auto it = std::sregex_iterator(operands.begin(), operands.end(), operand_re);
             it != std::sregex_iterator(); ++it) {
            qs.push_back(std::stoi((*it)[1].str()));
        }
        auto need = [&](std::size_t nq, bool param) {
            if (qs.size() != nq || has_param != param) {
                throw ParseError(lineno, "wrong operands for '" + name + "'");
            }
        };
        try {
            if (name == "x") {
                need(1, false);
                circuit->add(Gate::x(qs[0]));
            } else if (name == "h") {
                need(1, false);
                circuit->add(Gate::h(qs[0]));
            } else if (name == "ry") {
                need(1, true);
                circuit->add(Gate::ry(parse_angle(trim(m[2].str()), lineno), qs[0]));
            } else if (name == "u1") {
                need(1, true);
                circuit->add(Gate::phase(parse_angle(trim(m[2].str()), lineno), qs[0]));
            } else if (name == "cx") {
                need(2, false);
                circuit->add(Gate::cnot(qs[0], qs[1]));
            } else if (name == "cu1") {
                need(2, true);
                circuit->add(Gate::cphase(parse_angle(trim(m[2].str()), lineno), qs[0], qs[1]));
            } else if (name == "ccx") {
                need(3, false);
                circuit->add(Gate::toffoli(qs[0], qs[1], qs[2]));
            } else {
                throw ParseError(lineno, "unsupported gate '" + name + "'");
            }
        } catch (const ParseError&) {
            throw;
        } catch (const std::exception& e) {
            throw ParseError(lineno, e.what());
        }
    }
    if (!circuit) throw ParseError(lineno, "missing qreg");
    return *circuit;
}

}  // namespace encconv
