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

#include "encconv/analysis.hpp"

#include <chrono>
#include <cmath>
#include <iomanip>
#include <stdexcept>

#include "encconv/encodings.hpp"

namespace encconv {

long predicted_uo_depth(int n) {
    if (n < 2) throw std::invalid_argument("predicted_uo_depth needs N >= 2");
    return 2L * ceil_log2(n) - 1;
}

double uo_size_bound(int n) {
    if (n < 2) throw std::invalid_argument("uo_size_bound needs N >= 2");
    return 1.0 + n + std::log2(static_cast<double>(n));
}

long uo_size_recurrence(int n) {
    if (n < 2) throw std::invalid_argument("uo_size_recurrence needs N >= 2");
    if (n == 2) return 1;
    if (n % 2 == 0) return uo_size_recurrence(n / 2) + n - 1;
    return uo_size_recurrence(n - 1) + 1;
}

const char* subject_name(SweepSubject s) {
    switch (s) {
        case SweepSubject::UbRecursion: return "recursion";
        case SweepSubject::UbExpandToNPlus1: return "expand-n1";
        case SweepSubject::UbExpandToPow2: return "expand-pow2";
        case SweepSubject::Uo: return "uo";
        case SweepSubject::CnotStair: return "cnot-stair";
    }
    return "?";
}

std::optional<SweepSubject> parse_subject(std::string_view s) {
    for (auto v : {SweepSubject::UbRecursion, SweepSubject::UbExpandToNPlus1, SweepSubject::UbExpandToPow2,
                   SweepSubject::Uo, SweepSubject::CnotStair}) {
        if (s == subject_name(v)) return v;
    }
    return std::nullopt;
}

SweepSubject subject_for(EvenMethod m) {
    switch (m) {
        case EvenMethod::Recursion: return SweepSubject::UbRecursion;
        case EvenMethod::ExpandToNPlus1: return SweepSubject::UbExpandToNPlus1;
        case EvenMethod::ExpandToPow2: return SweepSubject::UbExpandToPow2;
    }
    return SweepSubject::UbExpandToPow2;
}

SweepRow measure(int n, SweepSubject subject, const SweepOptions& options) {
    using clock = std::chrono::steady_clock;
    const auto start = clock::now();
    std::optional<Circuit> circuit;
    int ancilla = 0;
    switch (subject) {
        case SweepSubject::UbRecursion:
        case SweepSubject::UbExpandToNPlus1:
        case SweepSubject::UbExpandToPow2: {
            const EvenMethod m = subject == SweepSubject::UbRecursion      ? EvenMethod::Recursion
                                 : subject == SweepSubject::UbExpandToNPlus1 ? EvenMethod::ExpandToNPlus1
                                                                             : EvenMethod::ExpandToPow2;
            Converter conv = build_ub(n, m);
            ancilla = conv.plan.ancilla;
            circuit = std::move(conv.circuit);
            break;
        }
        case SweepSubject::Uo:
            circuit = build_uo(n);
            break;
        case SweepSubject::CnotStair:
            circuit = build_cnot_stair(n);
            break;
    }
    const auto built = clock::now();

    SweepRow row;
    row.n = n;
    row.subject = subject;
    row.ancilla = ancilla;
    if (options.logical) {
        const CostReport r = cost(*circuit, Granularity::Logical, ancilla);
        row.depth_logical = r.depth;
        row.size_logical = r.size;
    }
    if (options.basis) {
        const CostReport r = cost(*circuit, Granularity::TwoQubitBasis, ancilla);
        row.depth_basis = r.depth;
        row.size_basis = r.size;
    }
    if (options.timing) {
        row.build_time_ms = std::chrono::duration<double, std::milli>(built - start).count();
    }
    return row;
}

std::vector<SweepRow> run_sweep(std::span<const int> ns, std::span<const SweepSubject> subjects,
                                const SweepOptions& options) {
    std::vector<SweepRow> rows;
    rows.reserve(ns.size() * subjects.size());
    for (int n : ns) {
        for (SweepSubject s : subjects) rows.push_back(measure(n, s, options));
    }
    return rows;
}

void write_sweep_csv(std::ostream& os, std::span<const SweepRow> rows) {
    os << kSweepCsvHeader << '\n';
    for (const SweepRow& r : rows) {
        os << r.n << ',' << subject_name(r.subject) << ',' << r.depth_logical << ',' << r.depth_basis << ','
           << r.size_logical << ',' << r.size_basis << ',' << r.ancilla << ',' << std::fixed << std::setprecision(3)
           << r.build_time_ms << std::defaultfloat << '\n';
    }
}

ScalingFit fit_scaling(std::span<const double> ns, std::span<const double> ys, ScalingModel model) {
    if (ns.size() != ys.size()) throw std::invalid_argument("fit_scaling: size mismatch");
    if (ns.size() < 5) throw std::invalid_argument("fit_scaling needs at least five samples");
    auto g = [model](double n) {
        if (model == ScalingModel::Linear) return n;
        const double l = std::log2(n);
        return l * l;
    };
    double num = 0;
    double den = 0;
    for (std::size_t i = 0; i < ns.size(); ++i) {
        num += ys[i] * g(ns[i]);
        den += g(ns[i]) * g(ns[i]);
    }
    if (den == 0) throw std::invalid_argument("fit_scaling: degenerate model values");
    ScalingFit fit;
    fit.coefficient = num / den;
    for (std::size_t i = 0; i < ns.size(); ++i) {
        if (ys[i] <= 0) throw std::invalid_argument("fit_scaling needs positive samples");
        const double r = std::abs(ys[i] - fit.coefficient * g(ns[i])) / ys[i];
        fit.max_relative_residual = std::max(fit.max_relative_residual, r);
    }
    return fit;
}

}  // namespace encconv
