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
 * Closed-form depth/size predictions for U_O, the sweep runner over N and a
 * one-parameter least-squares fit for scaling trends.
 */

#pragma once

#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "encconv/converters.hpp"

namespace encconv {

/// 2 ceil(log2 N) - 1.
long predicted_uo_depth(int n);

/// 1 + N + log2 N.
double uo_size_bound(int n);

/// s(2) = 1, s(N) = s(N/2) + N - 1 for even N, s(N-1) + 1 for odd N.
long uo_size_recurrence(int n);

/// What a sweep row measures.
enum class SweepSubject {
    UbRecursion,
    UbExpandToNPlus1,
    UbExpandToPow2,
    Uo,
    CnotStair,
};

const char* subject_name(SweepSubject s);
std::optional<SweepSubject> parse_subject(std::string_view s);
SweepSubject subject_for(EvenMethod m);

struct SweepRow {
    int n = 0;
    SweepSubject subject = SweepSubject::UbExpandToPow2;
    long depth_logical = 0;
    long depth_basis = 0;
    long size_logical = 0;
    long size_basis = 0;
    int ancilla = 0;
    double build_time_ms = 0;
};

struct SweepOptions {
    bool logical = true;
    bool basis = true;
    /// Wall-clock build time; off by default so output is reproducible.
    bool timing = false;
};

/// Rows ordered by N, then by the order of `subjects`. Columns that were not
/// requested stay 0.
std::vector<SweepRow> run_sweep(std::span<const int> ns, std::span<const SweepSubject> subjects,
                                const SweepOptions& options = {});

SweepRow measure(int n, SweepSubject subject, const SweepOptions& options = {});

inline constexpr std::string_view kSweepCsvHeader =
    "N,method,depth_logical,depth_basis,size_logical,size_basis,ancilla,build_time_ms";

void write_sweep_csv(std::ostream& os, std::span<const SweepRow> rows);

enum class ScalingModel { LogSquared, Linear };

struct ScalingFit {
    double coefficient = 0;
    double max_relative_residual = 0;
};

/// Least-squares A in y ~ A g(N), with g = log2(N)^2 or N, and the largest
/// |y - A g(N)| / y over the samples. Needs at least five samples.
ScalingFit fit_scaling(std::span<const double> ns, std::span<const double> ys, ScalingModel model);

}  // namespace encconv
