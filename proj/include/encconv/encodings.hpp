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
 * Amplitude encodings of an N-level vector {alpha_i}:
 *
 *   one-hot : level i -> a single 1 at right offset i      (index 2^i)
 *   binary  : level i -> the binary digits of i            (index i)
 *   Edick   : level i -> i ones, right aligned             (index 2^i - 1)
 *
 * plus Dicke states |D_k^n>, the uniform superposition over weight-k strings.
 * Wider registers are allowed; the extra qubits sit on the left as |0>.
 */

#pragma once

#include <Eigen/Dense>

#include <complex>
#include <istream>
#include <ostream>
#include <random>
#include <span>
#include <vector>

#include "encconv/statevector.hpp"

namespace encconv {

enum class Encoding { OneHot, Binary, Edick };

const char* encoding_name(Encoding e);

/// Encoding selector for build_state; Dicke(k) carries its weight.
struct EncodingKind {
    enum class Tag { OneHot, Binary, Edick, Dicke };
    Tag tag = Tag::OneHot;
    int weight = 0;

    static EncodingKind of(Encoding e);
    static EncodingKind dicke(int k) { return {Tag::Dicke, k}; }
    bool is_dicke() const { return tag == Tag::Dicke; }
    Encoding encoding() const;
};

/// Unit-norm coefficient vector of length N >= 2.
class AmplitudeVector {
public:
    using Vector = Eigen::VectorXcd;
    static constexpr double kNormTolerance = 1e-10;

    explicit AmplitudeVector(Vector alphas);
    explicit AmplitudeVector(std::span<const double> alphas);

    static AmplitudeVector uniform(int n);
    static AmplitudeVector level(int n, int i);
    /// Gaussian entries, normalised. Real unless `complex_entries`.
    static AmplitudeVector random(int n, std::mt19937_64& rng, bool complex_entries = false);

    int size() const { return static_cast<int>(alphas_.size()); }
    const Vector& alphas() const { return alphas_; }
    std::complex<double> operator[](int i) const { return alphas_(i); }

private:
    Vector alphas_;
};

/// Fewest qubits that hold N levels in encoding `e`.
int min_width(Encoding e, int n);

/// ceil(log2(n)) for n >= 1.
int ceil_log2(long n);

/// Basis index of level i. Throws std::out_of_range when the level does not
/// fit in `width` qubits.
BasisIndex level_to_basis(Encoding e, int level, int width);

/// Places alpha_i on level_to_basis(kind, i, width). Dicke(k) ignores `v` and
/// returns |D_k^width>.
Statevector build_state(EncodingKind kind, const AmplitudeVector& v, int width);

Statevector dicke_state(int width, int k);

/// Amplitudes at `level_indices`; throws std::runtime_error when more than
/// `stray_tolerance` probability mass lies elsewhere.
AmplitudeVector read_levels(const Statevector& s, std::span<const BasisIndex> level_indices,
                            double stray_tolerance = 1e-9);

AmplitudeVector read_state(Encoding e, const Statevector& s, int n, double stray_tolerance = 1e-9);

/// Probability mass outside `level_indices`.
double stray_mass(const Statevector& s, std::span<const BasisIndex> level_indices);

/// Amplitude file: one real per line, or `real,imag` per line. Blank lines
/// and `#` comments are skipped.
AmplitudeVector read_amplitudes(std::istream& is);
void write_amplitudes(std::ostream& os, const AmplitudeVector& v);

}  // namespace encconv
