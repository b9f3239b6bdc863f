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

#include <random>
#include <stdexcept>

#include "encconv/converters.hpp"
#include "encconv/encodings.hpp"
#include "support.hpp"

using namespace encconv;
using encconv::testing::bits;
using encconv::testing::worst_level_error;

namespace {

constexpr EvenMethod kMethods[] = {EvenMethod::Recursion, EvenMethod::ExpandToNPlus1, EvenMethod::ExpandToPow2};

BasisIndex image(const Circuit& c, BasisIndex in) {
    Statevector s = Statevector::basis(c.num_qubits(), in);
    s.run(c);
    for (BasisIndex i = 0; i < s.dim(); ++i) {
        if (std::norm(s[i]) > 0.5) return i;
    }
    return ~BasisIndex{0};
}

}  // namespace

TEST_CASE("U_O golden rows for four and five levels") {
    const Circuit u4 = build_uo(4);
    CHECK(image(u4, bits("0001")) == bits("0001"));
    CHECK(image(u4, bits("0011")) == bits("0010"));
    CHECK(image(u4, bits("0111")) == bits("0100"));
    CHECK(image(u4, bits("1111")) == bits("1000"));

    const Circuit u5 = build_uo(5);
    CHECK(image(u5, bits("00001")) == bits("00001"));
    CHECK(image(u5, bits("00011")) == bits("00010"));
    CHECK(image(u5, bits("00111")) == bits("00100"));
    CHECK(image(u5, bits("01111")) == bits("01000"));
    CHECK(image(u5, bits("11111")) == bits("10000"));
}

TEST_CASE("U_O small cases") {
    CHECK(build_uo(2).size() == 1);
    CHECK(build_uo(2).gates()[0] == Gate::cnot(0, 1));
    CHECK(build_uo(4).size() == 4);
    CHECK_THROWS_AS(build_uo(1), std::invalid_argument);
}

TEST_CASE("U_B golden end states for seven levels") {
    const Circuit u7 = build_ub(7, EvenMethod::Recursion).circuit;
    REQUIRE(u7.num_qubits() == 6);
    const char* in[] = {"000000", "000001", "000011", "000111", "001111", "011111", "111111"};
    const char* out[] = {"000000", "000001", "000010", "000011", "000100", "000101", "000110"};
    for (int i = 0; i < 7; ++i) {
        CAPTURE(i);
        CHECK(image(u7, bits(in[i])) == bits(out[i]));
    }
}

TEST_CASE("U_B base cases") {
    const Converter two = build_ub(2, EvenMethod::ExpandToPow2);
    CHECK(two.circuit.num_qubits() == 1);
    CHECK(two.circuit.empty());
    const Converter three = build_ub(3, EvenMethod::Recursion);
    REQUIRE(three.circuit.size() == 1);
    CHECK(three.circuit.gates()[0] == Gate::cnot(0, 1));
}

TEST_CASE("U_B is exact for every method and N up to 16") {
    for (int n = 2; n <= 16; ++n) {
        for (EvenMethod m : kMethods) {
            CAPTURE(n);
            CAPTURE(method_name(m));
            const Converter ub = build_ub(n, m);
            CHECK(ub.plan.total_qubits == ub.circuit.num_qubits());
            CHECK(ub.plan.ancilla == ub.plan.total_qubits - (n - 1));
            CHECK(worst_level_error(ub.circuit, ub.plan) < 1e-9);
        }
    }
}

TEST_CASE("ancilla counts per method") {
    for (int n = 2; n <= 40; ++n) {
        CAPTURE(n);
        CHECK(build_ub(n, EvenMethod::Recursion).plan.ancilla == 0);
        const int pow2 = build_ub(n, EvenMethod::ExpandToPow2).plan.ancilla;
        CHECK(pow2 <= n - 1);
        const int k = ceil_log2(n - 1);
        CHECK(build_ub(n, EvenMethod::ExpandToPow2).plan.total_qubits == (1 << k));
    }
    for (int k = 1; k <= 6; ++k) {
        for (EvenMethod m : kMethods) CHECK(build_ub((1 << k) + 1, m).plan.ancilla == 0);
    }
}

TEST_CASE("recursion step from an explicit sub converter") {
    for (int n : {4, 6, 8}) {
        CAPTURE(n);
        const Converter sub = build_ub(n - 1, EvenMethod::Recursion);
        const Converter step = build_recursion_step(n, sub);
        CHECK(step.plan.ancilla == 0);
        CHECK(worst_level_error(step.circuit, step.plan) < 1e-9);
    }
    CHECK_THROWS(build_recursion_step(5, build_ub(4, EvenMethod::Recursion)));
}

TEST_CASE("adder shifts every basis state") {
    for (int n = 1; n <= 5; ++n) {
        for (long long d = 0; d < (1LL << n); ++d) {
            const Circuit add = build_adder(n, d);
            for (BasisIndex j = 0; j < (BasisIndex{1} << n); ++j) {
                Statevector s = Statevector::basis(n, j);
                s.run(add);
                const BasisIndex want = (j + static_cast<BasisIndex>(d)) % (BasisIndex{1} << n);
                CHECK(std::norm(s[want]) > 1 - 1e-9);
            }
        }
    }
    CHECK(build_adder(3, 11) == build_adder(3, 3));
    CHECK(build_adder(3, -1) == build_adder(3, 7));
}

TEST_CASE("onehot to binary and back keeps random amplitudes") {
    std::mt19937_64 rng(5);
    for (int n = 3; n <= 9; ++n) {
        for (EvenMethod m : kMethods) {
            CAPTURE(n);
            const Converter fwd = build_onehot_to_binary(n, m);
            const Converter back = build_binary_to_onehot(n, m);
            CHECK(worst_level_error(fwd.circuit, fwd.plan) < 1e-9);
            CHECK(worst_level_error(back.circuit, back.plan) < 1e-9);

            const AmplitudeVector v = AmplitudeVector::random(n, rng, true);
            Statevector s = build_state(EncodingKind::of(Encoding::OneHot), v, fwd.plan.total_qubits);
            const Statevector start = s;
            s.run(fwd.circuit);
            s.run(back.circuit);
            CHECK(fidelity(s, start) > 1 - 1e-12);
        }
    }
}

TEST_CASE("binary to onehot ancilla is the width beyond the binary register") {
    const Converter c = build_binary_to_onehot(7, EvenMethod::Recursion);
    CHECK(c.plan.input_qubits() == 3);
    CHECK(c.plan.ancilla == c.plan.total_qubits - 3);
    CHECK(c.plan.input_basis(5) == bits("1011"));
    CHECK(c.plan.output_basis(5) == bits("100000"));
}

TEST_CASE("cnot stair matches U_O on every level") {
    for (int n = 2; n <= 12; ++n) {
        CAPTURE(n);
        const Circuit stair = build_cnot_stair(n);
        CHECK(static_cast<long>(stair.size()) == n * (n - 1) / 2);
        for (int i = 0; i < n; ++i) {
            const BasisIndex in = (BasisIndex{2} << i) - 1;
            CHECK(image(stair, in) == image(build_uo(n), in));
        }
    }
}

TEST_CASE("dispatch by direction and names") {
    for (Direction d : {Direction::EdickToOneHot, Direction::EdickToBinary, Direction::OneHotToBinary,
                        Direction::BinaryToOneHot}) {
        CHECK(parse_direction(direction_name(d)) == d);
        const Converter c = build_converter(d, 6, EvenMethod::ExpandToNPlus1);
        CHECK(c.plan.direction == d);
        CHECK(worst_level_error(c.circuit, c.plan) < 1e-9);
    }
    for (EvenMethod m : kMethods) CHECK(parse_method(method_name(m)) == m);
    CHECK_FALSE(parse_method("nope"));
    CHECK_THROWS_AS(build_ub(1, EvenMethod::Recursion), std::invalid_argument);
}
