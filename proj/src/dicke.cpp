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

#include "encconv/dicke.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace encconv {

namespace {

double split_angle(int l, int n) {
    return 2.0 * std::acos(std::sqrt(static_cast<double>(l) / static_cast<double>(n)));
}

}  // namespace

Circuit build_scs(int n, int k) {
    if (k < 1 || k > n - 1) {
        throw std::invalid_argument("scs needs 1 <= k <= n-1 (n=" + std::to_string(n) + ", k=" + std::to_string(k) +
                                    ")");
    }
    Circuit c(k + 1, "scs" + std::to_string(n) + "," + std::to_string(k));
    c.add(Gate::cnot(k - 1, k));
    c.add(Gate::cry(split_angle(1, n), k, k - 1));
    c.add(Gate::cnot(k - 1, k));
    for (int l = 2; l <= k; ++l) {
        const int a = k - l;
        c.add(Gate::cnot(a, k));
        c.add(Gate::ccry(split_angle(l, n), k, a + 1, a));
        c.add(Gate::cnot(a, k));
    }
    return c;
}

Circuit build_dicke_unitary(int n) {
    if (n < 2) throw std::invalid_argument("Dicke unitary needs N >= 2");
    Circuit c(n, "dicke" + std::to_string(n));
    for (int l = n; l >= 2; --l) c.append_mapped(build_scs(l, l - 1), qubit_range(0, l));
    return c;
}

BinomialSpec::BinomialSpec(int n, double p, Encoding target, EvenMethod method)
    : n_(n), p_(p), theta_(0), target_(target), method_(method) {
    if (n < 2) throw std::invalid_argument("binomial state needs N >= 2 trials");
    if (!(p >= 0.0 && p <= 1.0)) throw std::invalid_argument("p must lie in [0, 1]");
    theta_ = 2.0 * std::asin(std::sqrt(p));
}

BinomialPipeline build_binomial_pipeline(const BinomialSpec& spec) {
    const int n = spec.trials();
    const int levels = n + 1;

    // Staircase preparation on `data` qubits.
    auto prepare = [&](Circuit& c, int first) {
        for (int q = 0; q < n; ++q) c.add(Gate::ry(spec.theta(), first + q));
        c.append_mapped(inverse(build_dicke_unitary(n)), qubit_range(first, n));
    };

    BinomialPipeline out{Circuit(1), {}, {}};
    out.plan.levels = levels;
    out.plan.method = spec.method();
    switch (spec.target()) {
        case Encoding::Edick: {
            Circuit c(n, "binomial-edick");
            prepare(c, 0);
            out.circuit = c;
            out.plan.direction = Direction::EdickToBinary;
            out.plan.total_qubits = n;
            out.plan.ancilla = 0;
            for (int i = 0; i < levels; ++i) out.level_basis.push_back(level_to_basis(Encoding::Edick, i, n));
            break;
        }
        case Encoding::OneHot: {
            Circuit c(n + 1, "binomial-onehot");
            c.add(Gate::x(n));
            prepare(c, 0);
            c.append(build_uo(levels));
            out.circuit = c;
            out.plan = build_converter(Direction::EdickToOneHot, levels, spec.method()).plan;
            for (int i = 0; i < levels; ++i) out.level_basis.push_back(out.plan.output_basis(i));
            break;
        }
        case Encoding::Binary: {
            const Converter ub = build_ub(levels, spec.method());
            const int a = ub.plan.ancilla;
            Circuit c(ub.plan.total_qubits, "binomial-binary");
            prepare(c, a);
            c.append(ub.circuit);
            out.circuit = c;
            out.plan = ub.plan;
            for (int i = 0; i < levels; ++i) out.level_basis.push_back(ub.plan.output_basis(i));
            break;
        }
    }
    return out;
}

double variance_of(const BinomialSpec& spec) {
    const double s = std::sin(spec.theta());
    return spec.trials() * s * s / 4.0;
}

std::vector<double> binomial_pmf(int n, double p) {
    if (n < 0) throw std::invalid_argument("binomial_pmf needs n >= 0");
    std::vector<double> f(static_cast<std::size_t>(n) + 1);
    double choose = 1.0;
    for (int i = 0; i <= n; ++i) {
        f[static_cast<std::size_t>(i)] = choose * std::pow(p, i) * std::pow(1.0 - p, n - i);
        choose = choose * (n - i) / (i + 1);
    }
    return f;
}

}  // namespace encconv
