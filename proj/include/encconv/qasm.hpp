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

#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

#include "encconv/circuit.hpp"

namespace encconv {

/// OpenQASM 2.0 subset: x, h, ry, u1, cx, cu1, ccx on a single `q` register.
/// CRY, CCRY and MCX gates are lowered through decompose_to_basis before
/// being written. Angles use the shortest round-trip decimal form.
std::string emit_text(const Circuit& c);

struct ParseError : std::runtime_error {
    ParseError(int line, const std::string& what);
    int line;
};

/// Reads the subset written by emit_text. A leading `// label` comment
/// becomes the circuit label.
Circuit parse_text(std::string_view text);

}  // namespace encconv
