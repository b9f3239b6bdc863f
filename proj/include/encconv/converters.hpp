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

/**
 * @file
 * Converters between the Edick, one-hot and binary encodings.
 *
 * Register layout is the same for every converter: ancilla qubits (|0> in,
 * |0> out) sit on the left, the encoded data is right aligned. A binary
 * output occupies the rightmost ceil(log2 N) data qubits; the one-hot
 * converters keep the |1> flag qubit on the far right.
 */

#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "encconv/circuit.hpp"
#include "encconv/statevector.hpp"

namespace encconv {

/// How U_B handles sub-problems with an even number of levels.
enum class EvenMethod {
    Recursion,       ///< U_B^(N-1) plus a CNOT fix-up and one MCX, no ancilla
    ExpandToNPlus1,  ///< run U_B^(N+1) with one extra |0> on the left
    ExpandToPow2,    ///< run U_B^(2^k+1), the least such size >= N
};

enum class Direction { EdickToOneHot, EdickToBinary, OneHotToBinary, BinaryToOneHot };

const char* method_name(EvenMethod m);
const char* direction_name(Direction d);
std::optional<EvenMethod> parse_method(std::string_view s);
std::optional<Direction> parse_direction(std::string_view s);

struct ConverterPlan {
    int levels = 0;
    EvenMethod method = EvenMethod::ExpandToPow2;
    Direction direction = Direction::EdickToBinary;
    int total_qubits = 0;
    int ancilla = 0;

    /// Qubits the input encoding needs on its own.
    int input_qubits() const;
    /// Basis index holding level i before / after the converter runs.
    BasisIndex input_basis(int level) const;
    BasisIndex output_basis(int level) const;
};

struct Converter {
    Circuit circuit;
    ConverterPlan plan;
};

/// Edick (N-1 qubits) followed by a |1> flag, to one-hot on N qubits.
Circuit build_uo(int n);

/// Edick on N-1 qubits to |0...0>|binary>.
Converter build_ub(int n, EvenMethod method);

/// |j> -> |(j + d) mod 2^n> on n qubits: QFT, per-qubit phases, inverse QFT.
Circuit build_adder(int n, long long d);

/// Even-N step without ancilla: `sub` (U_B for N-1 levels) on the last N-2
/// Edick qubits, a CNOT fix-up from the top qubit for each bit where N-1 and
/// N-2 differ, then an MCX that clears the top qubit on pattern N-1.
Converter build_recursion_step(int n, const Converter& sub);

/// (U_B x I) . U_O^-1 on one-hot input.
Converter build_onehot_to_binary(int n, EvenMethod method);

/// U_O . (U_B^-1 x I) on |0...0>|binary>|1> input.
Converter build_binary_to_onehot(int n, EvenMethod method);

/// Quadratic baseline with the same contract as build_uo.
Circuit build_cnot_stair(int n);

/// Dispatch on direction; the method is ignored for EdickToOneHot.
Converter build_converter(Direction direction, int n, EvenMethod method);

}  // namespace encconv
