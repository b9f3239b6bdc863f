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
 * Dicke-state unitaries and the binomial-distribution pipeline.
 *
 * RY(theta) on each of N qubits gives sum_k sqrt(f(k,p)) |D_k^N> with
 * p = sin^2(theta/2). Undoing the Dicke unitary collapses each |D_k^N> to the
 * staircase |0^(N-k) 1^k>, which is an Edick state of N+1 levels; a converter
 * then moves it to one-hot or binary.
 */

#pragma once

#include <vector>

#include "encconv/converters.hpp"
#include "encconv/encodings.hpp"

namespace encconv {

/// Split & cyclic shift on k+1 qubits: one CNOT/CRY/CNOT block on the last
/// two qubits, then k-1 CNOT/CCRY/CNOT blocks reaching further left.
Circuit build_scs(int n, int k);

/// Maps |0^(N-k) 1^k> to |D_k^N> for every k in 0..N.
Circuit build_dicke_unitary(int n);

class BinomialSpec {
public:
    /// Throws std::invalid_argument unless n >= 2 and 0 <= p <= 1.
    BinomialSpec(int n, double p, Encoding target = Encoding::Edick,
                 EvenMethod method = EvenMethod::ExpandToPow2);

    int trials() const { return n_; }
    double p() const { return p_; }
    double theta() const { return theta_; }
    Encoding target() const { return target_; }
    EvenMethod method() const { return method_; }

private:
    int n_;
    double p_;
    double theta_;
    Encoding target_;
    EvenMethod method_;
};

struct BinomialPipeline {
    /// Runs from |0...0> on circuit.num_qubits() qubits.
    Circuit circuit;
    /// The converter stage (N+1 levels). For an Edick target no converter
    /// runs and the plan only records the register.
    ConverterPlan plan;
    /// Basis index that carries sqrt(f(i, p)), for i = 0..N.
    std::vector<BasisIndex> level_basis;
};

BinomialPipeline build_binomial_pipeline(const BinomialSpec& spec);

/// N sin^2(theta) / 4, i.e. N p (1 - p).
double variance_of(const BinomialSpec& spec);

/// C(n, i) p^i (1-p)^(n-i) for i = 0..n.
std::vector<double> binomial_pmf(int n, double p);

}  // namespace encconv
