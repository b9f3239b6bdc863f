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
 * Dense statevector simulator. Controlled gates act by index masking, so the
 * permutation gates (X, CNOT, Toffoli, MCX) move amplitudes without
 * arithmetic and stay exact.
 */

#pragma once

#include <Eigen/Dense>

#include <cmath>
#include <complex>
#include <cstdint>
#include <ostream>
#include <stdexcept>
#include <string>

#include "encconv/circuit.hpp"

namespace encconv {

using BasisIndex = std::uint64_t;

template <typename Scalar>
class BasicStatevector {
public:
    using Complex = std::complex<Scalar>;
    using Vector = Eigen::Matrix<Complex, Eigen::Dynamic, 1>;

    static constexpr int kMaxQubits = 30;

    /// |0...0> on `num_qubits` qubits.
    explicit BasicStatevector(int num_qubits) : num_qubits_(checked_width(num_qubits)) {
        amps_ = Vector::Zero(static_cast<Eigen::Index>(dim()));
        amps_(0) = Complex(1);
    }

    static BasicStatevector basis(int num_qubits, BasisIndex index) {
        BasicStatevector s(num_qubits);
        if (index >= s.dim()) throw std::out_of_range("basis index outside register");
        s.amps_(0) = Complex(0);
        s.amps_(static_cast<Eigen::Index>(index)) = Complex(1);
        return s;
    }

    static BasicStatevector from_amplitudes(int num_qubits, Vector amps) {
        BasicStatevector s(num_qubits);
        if (amps.size() != static_cast<Eigen::Index>(s.dim())) {
            throw std::invalid_argument("amplitude count does not match 2^num_qubits");
        }
        s.amps_ = std::move(amps);
        return s;
    }

    int num_qubits() const { return num_qubits_; }
    BasisIndex dim() const { return BasisIndex{1} << num_qubits_; }
    const Vector& amplitudes() const { return amps_; }
    Complex operator[](BasisIndex i) const { return amps_(static_cast<Eigen::Index>(i)); }
    Scalar norm() const { return amps_.norm(); }

    /// Bit of the basis index that holds qubit q.
    BasisIndex qubit_mask(int q) const { return BasisIndex{1} << (num_qubits_ - 1 - q); }

    void apply(const Gate& g) {
        if (g.max_qubit() >= num_qubits_) {
            throw std::out_of_range(std::string("gate ") + gate_name(g.kind()) + " addresses qubit " +
                                    std::to_string(g.max_qubit()) + " of a " + std::to_string(num_qubits_) +
                                    "-qubit state");
        }
        BasisIndex cmask = 0;
        for (int c : g.controls()) cmask |= qubit_mask(c);
        const BasisIndex tmask = qubit_mask(g.target());
        const BasisIndex n = dim();

        switch (g.base()) {
            case GateKind::X:
                for (BasisIndex i = 0; i < n; ++i) {
                    if ((i & tmask) == 0 && (i & cmask) == cmask) {
                        std::swap(amps_(idx(i)), amps_(idx(i | tmask)));
                    }
                }
                break;
            case GateKind::Phase: {
                const Complex w = std::polar(Scalar(1), static_cast<Scalar>(g.angle()));
                const BasisIndex need = cmask | tmask;
                for (BasisIndex i = 0; i < n; ++i) {
                    if ((i & need) == need) amps_(idx(i)) *= w;
                }
                break;
            }
            case GateKind::H: {
                const Scalar r = Scalar(1) / std::sqrt(Scalar(2));
                rotate(cmask, tmask, r, r, r, -r);
                break;
            }
            case GateKind::RY: {
                const Scalar c = std::cos(static_cast<Scalar>(g.angle()) / 2);
                const Scalar s = std::sin(static_cast<Scalar>(g.angle()) / 2);
                rotate(cmask, tmask, c, -s, s, c);
                break;
            }
            default:
                throw std::logic_error("unexpected base gate");
        }
    }

    void run(const Circuit& c) {
        if (c.num_qubits() > num_qubits_) {
            throw std::out_of_range("circuit is wider than the state");
        }
        for (const Gate& g : c) apply(g);
    }

private:
    static int checked_width(int n) {
        if (n < 1 || n > kMaxQubits) throw std::invalid_argument("statevector width out of range");
        return n;
    }
    static Eigen::Index idx(BasisIndex i) { return static_cast<Eigen::Index>(i); }

    // Real 2x2 [[a, b], [c, d]] on the target pair of every controlled block.
    void rotate(BasisIndex cmask, BasisIndex tmask, Scalar a, Scalar b, Scalar c, Scalar d) {
        const BasisIndex n = dim();
        for (BasisIndex i = 0; i < n; ++i) {
            if ((i & tmask) == 0 && (i & cmask) == cmask) {
                const Complex lo = amps_(idx(i));
                const Complex hi = amps_(idx(i | tmask));
                amps_(idx(i)) = a * lo + b * hi;
                amps_(idx(i | tmask)) = c * lo + d * hi;
            }
        }
    }

    int num_qubits_;
    Vector amps_;
};

using Statevector = BasicStatevector<double>;

template <typename Scalar>
BasicStatevector<Scalar> apply(BasicStatevector<Scalar> s, const Gate& g) {
    s.apply(g);
    return s;
}

template <typename Scalar>
BasicStatevector<Scalar> run(BasicStatevector<Scalar> s, const Circuit& c) {
    s.run(c);
    return s;
}

/// |<a|b>|.
template <typename Scalar>
Scalar fidelity(const BasicStatevector<Scalar>& a, const BasicStatevector<Scalar>& b) {
    if (a.num_qubits() != b.num_qubits()) throw std::invalid_argument("fidelity: width mismatch");
    return std::abs(a.amplitudes().dot(b.amplitudes()));
}

/// CSV dump, header `index,real,imag`, one row per basis state.
template <typename Scalar>
void write_csv(std::ostream& os, const BasicStatevector<Scalar>& s) {
    os << "index,real,imag\n";
    const auto old = os.precision(17);
    for (BasisIndex i = 0; i < s.dim(); ++i) {
        os << i << ',' << s[i].real() << ',' << s[i].imag() << '\n';
    }
    os.precision(old);
}

}  // namespace encconv
