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

#include "doctest.h"

#include <numbers>

#include "encconv/converters.hpp"
#include "encconv/qasm.hpp"
#include "support.hpp"

using namespace encconv;

TEST_CASE("emit then parse reproduces U_B for seven levels") {
    for (EvenMethod m : {EvenMethod::Recursion, EvenMethod::ExpandToPow2}) {
        const Converter ub = build_ub(7, m);
        const std::string text = emit_text(ub.circuit);
        const Circuit back = parse_text(text);
        CHECK(back.num_qubits() == ub.circuit.num_qubits());
        CHECK(back.label() == ub.circuit.label());
        CHECK(encconv::testing::max_unitary_diff(back, ub.circuit) < 1e-12);
        CHECK(emit_text(back) == text);
    }
}

TEST_CASE("angles survive the text round trip bit for bit") {
    Circuit c(2, "angles");
    c.add(Gate::ry(std::numbers::pi / 3, 0));
    c.add(Gate::cphase(-1e-17, 0, 1));
    c.add(Gate::phase(2 * std::numbers::pi * 5 / 7, 1));
    CHECK(parse_text(emit_text(c)) == c);
}

TEST_CASE("emitted text uses the expected statements") {
    Circuit c(3);
    c.add(Gate::cnot(0, 1));
    c.add(Gate::ry(0.5, 2));
    CHECK(emit_text(c) == "OPENQASM 2.0;\ninclude \"qelib1.inc\";\nqreg q[3];\ncx q[0],q[1];\nry(0.5) q[2];\n");
}

TEST_CASE("parse errors carry the line number") {
    auto line_of = [](const char* text) {
        try {
            parse_text(text);
        } catch (const ParseError& e) {
            return e.line;
        }
        return 0;
    };
    CHECK(line_of("OPENQASM 2.0;\nqreg q[2];\nfoo q[0];\n") == 3);
    CHECK(line_of("OPENQASM 3.0;\n") == 1);
    CHECK(line_of("OPENQASM 2.0;\nqreg q[2];\ncx q[0],q[5];\n") == 3);
    CHECK(line_of("OPENQASM 2.0;\nqreg q[2];\nry(abc) q[0];\n") == 3);
    CHECK(line_of("OPENQASM 2.0;\nx q[0];\n") == 2);
}
