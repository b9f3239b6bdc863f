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

#include <algorithm>
#include <cmath>
#include <complex>

#include "encconv/circuit.hpp"
#include "encconv/converters.hpp"
#include "encconv/statevector.hpp"

namespace encconv::testing {

// Largest |<j|A|i> - <j|B|i>| over all basis columns.
inline double max_unitary_diff(const Circuit& a, const Circuit& b) {
    const int n = std::max(a.num_qubits(), b.num_qubits());
    double worst = 0;
    for (BasisIndex i = 0; i < (BasisIndex{1} << n); ++i) {
        Statevector sa = Statevector::basis(n, i);
        Statevector sb = sa;
        sa.run(a);
        sb.run(b);
        worst = std::max(worst, (sa.amplitudes() - sb.amplitudes()).cwiseAbs().maxCoeff());
    }
    return worst;
}

// 1 - |<out(i)|C|in(i)>|^2, maximised over levels.
inline double worst_level_error(const Circuit& c, const ConverterPlan& plan) {
    double worst = 0;
    for (int i = 0; i < plan.levels; ++i) {
        Statevector s = Statevector::basis(plan.total_qubits, plan.input_basis(i));
        s.run(c);
        worst = std::max(worst, 1.0 - std::norm(s[plan.output_basis(i)]));
    }
    return worst;
}

inline BasisIndex bits(const char* s) {
    BasisIndex v = 0;
    for (; *s; ++s) v = (v << 1) | static_cast<BasisIndex>(*s == '1');
    return v;
}

}  // namespace encconv::testing
