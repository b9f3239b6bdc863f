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

#include "encconv/circuit.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace encconv {

namespace {

std::size_t expected_controls(GateKind kind) {
    switch (kind) {
        case GateKind::X:
        case GateKind::H:
        case GateKind::RY:
        case GateKind::Phase:
            return 0;
        case GateKind::CNOT:
        case GateKind::CPhase:
        case GateKind::CRY:
            return 1;
        case GateKind::CCRY:
        case GateKind::Toffoli:
            return 2;
        case GateKind::MCX:
            return 0;  // variable, checked separately
    }
    return 0;
}

bool has_angle(GateKind kind) {
    switch (kind) {
        case GateKind::RY:
        case GateKind::Phase:
        case GateKind::CPhase:
        case GateKind::CRY:
        case GateKind::CCRY:
            return true;
        default:
            return false;
    }
}

}  // namespace

const char* gate_name(GateKind kind) {
    switch (kind) {
        case GateKind::X: return "x";
        case GateKind::H: return "h";
        case GateKind::RY: return "ry";
        case GateKind::Phase: return "u1";
        case GateKind::CNOT: return "cx";
        case GateKind::CPhase: return "cu1";
        case GateKind::CRY: return "cry";
        case GateKind::CCRY: return "ccry";
        case GateKind::Toffoli: return "ccx";
        case GateKind::MCX: return "mcx";
    }
    return "?";
}

Gate::Gate(GateKind kind, std::vector<int> controls, int target, double angle)
    : kind_(kind), controls_(std::move(controls)), target_(target), angle_(has_angle(kind) ? angle : 0.0) {
    if (kind_ == GateKind::MCX) {
        if (controls_.empty()) {
            throw std::invalid_argument("mcx needs at least one control");
        }
    } else if (controls_.size() != expected_controls(kind_)) {
        throw std::invalid_argument(std::string("wrong control count for ") + gate_name(kind_));
    }
    if (!std::isfinite(angle_)) {
        throw std::invalid_argument(std::string("non-finite angle for ") + gate_name(kind_));
    }
    auto qs = qubits();
    for (int q : qs) {
        if (q < 0) throw std::invalid_argument("negative qubit index");
    }
    std::sort(qs.begin(), qs.end());
    if (std::adjacent_find(qs.begin(), qs.end()) != qs.end()) {
        throw std::invalid_argument(std::string("repeated qubit in ") + gate_name(kind_));
    }
}

Gate Gate::x(int q) { return Gate(GateKind::X, {}, q, 0.0); }
Gate Gate::h(int q) { return Gate(GateKind::H, {}, q, 0.0); }
Gate Gate::ry(double theta, int q) { return Gate(GateKind::RY, {}, q, theta); }
Gate Gate::phase(double lambda, int q) { return Gate(GateKind::Phase, {}, q, lambda); }
Gate Gate::cnot(int control, int target) { return Gate(GateKind::CNOT, {control}, target, 0.0); }
Gate Gate::cphase(double lambda, int control, int target) {
    return Gate(GateKind::CPhase, {control}, target, lambda);
}
Gate Gate::cry(double theta, int control, int target) { return Gate(GateKind::CRY, {control}, target, theta); }
Gate Gate::ccry(double theta, int c0, int c1, int target) {
    return Gate(GateKind::CCRY, {c0, c1}, target, theta);
}
Gate Gate::toffoli(int c0, int c1, int target) { return Gate(GateKind::Toffoli, {c0, c1}, target, 0.0); }
Gate Gate::mcx(std::vector<int> controls, int target) {
    return Gate(GateKind::MCX, std::move(controls), target, 0.0);
}

std::vector<int> Gate::qubits() const {
    std::vector<int> qs(controls_.begin(), controls_.end());
    qs.push_back(target_);
    return qs;
}

int Gate::max_qubit() const {
    int m = target_;
    for (int c : controls_) m = std::max(m, c);
    return m;
}

GateKind Gate::base() const {
    switch (kind_) {
        case GateKind::X:
        case GateKind::CNOT:
        case GateKind::Toffoli:
        case GateKind::MCX:
            return GateKind::X;
        case GateKind::H:
            return GateKind::H;
        case GateKind::RY:
        case GateKind::CRY:
        case GateKind::CCRY:
            return GateKind::RY;
        case GateKind::Phase:
        case GateKind::CPhase:
            return GateKind::Phase;
    }
    return GateKind::X;
}

Gate Gate::inverse() const {
    Gate g = *this;
    if (has_angle(kind_)) g.angle_ = -angle_;
    return g;
}

Gate Gate::remapped(std::span<const int> map) const {
    auto lookup = [&](int q) {
        if (q >= static_cast<int>(map.size())) throw std::out_of_range("qubit map too short");
        return map[static_cast<std::size_t>(q)];
    };
    std::vector<int> controls;
    controls.reserve(controls_.size());
    for (int c : controls_) controls.push_back(lookup(c));
    return Gate(kind_, std::move(controls), lookup(target_), angle_);
}

Circuit::Circuit(int num_qubits, std::string label) : num_qubits_(num_qubits), label_(std::move(label)) {
    if (num_qubits <= 0) throw std::invalid_argument("circuit needs at least one qubit");
}

Circuit& Circuit::add(Gate gate) {
    if (gate.max_qubit() >= num_qubits_) {
        throw std::out_of_range("gate qubit " + std::to_string(gate.max_qubit()) + " outside register of " +
                                std::to_string(num_qubits_));
    }
    gates_.push_back(std::move(gate));
    return *this;
}

Circuit& Circuit::append(const Circuit& other) {
    if (other.num_qubits_ != num_qubits_) {
        throw std::invalid_argument("append: qubit-count mismatch (" + std::to_string(num_qubits_) + " vs " +
                                    std::to_string(other.num_qubits_) + ")");
    }
    gates_.insert(gates_.end(), other.gates_.begin(), other.gates_.end());
    return *this;
}

Circuit& Circuit::append_mapped(const Circuit& sub, std::span<const int> map) {
    if (static_cast<int>(map.size()) < sub.num_qubits()) {
        throw std::invalid_argument("append_mapped: map shorter than sub-circuit register");
    }
    for (const Gate& g : sub) add(g.remapped(map));
    return *this;
}

bool Circuit::operator==(const Circuit& other) const {
    return num_qubits_ == other.num_qubits_ && gates_ == other.gates_;
}

Circuit compose(const Circuit& a, const Circuit& b) {
    Circuit out = a;
    out.append(b);
    return out;
}

Circuit inverse(const Circuit& c) {
    Circuit out(c.num_qubits(), c.label());
    for (auto it = c.gates().rbegin(); it != c.gates().rend(); ++it) out.add(it->inverse());
    return out;
}

Circuit embed(const Circuit& c, int width, std::span<const int> map) {
    Circuit out(width, c.label());
    out.append_mapped(c, map);
    return out;
}

std::vector<int> qubit_range(int first, int count) {
    std::vector<int> v(static_cast<std::size_t>(std::max(count, 0)));
    for (int i = 0; i < count; ++i) v[static_cast<std::size_t>(i)] = first + i;
    return v;
}

const char* granularity_name(Granularity g) {
    return g == Granularity::Logical ? "logical" : "basis";
}

long greedy_depth(const Circuit& c) {
    std::vector<long> busy_until(static_cast<std::size_t>(c.num_qubits()), 0);
    long depth = 0;
    for (const Gate& g : c) {
        long layer = 0;
        for (int q : g.controls()) layer = std::max(layer, busy_until[static_cast<std::size_t>(q)]);
        layer = std::max(layer, busy_until[static_cast<std::size_t>(g.target())]) + 1;
        for (int q : g.controls()) busy_until[static_cast<std::size_t>(q)] = layer;
        busy_until[static_cast<std::size_t>(g.target())] = layer;
        depth = std::max(depth, layer);
    }
    return depth;
}

CostReport cost(const Circuit& c, Granularity granularity, int ancilla) {
    CostReport r;
    r.granularity = granularity;
    r.ancilla = ancilla;
    if (granularity == Granularity::TwoQubitBasis && !is_basis_circuit(c)) {
        const Circuit lowered = decompose_to_basis(c);
        r.depth = greedy_depth(lowered);
        r.size = static_cast<long>(lowered.size());
    } else {
        r.depth = greedy_depth(c);
        r.size = static_cast<long>(c.size());
    }
    return r;
}

bool is_basis_circuit(const Circuit& c) {
    return std::all_of(c.begin(), c.end(),
                       [](const Gate& g) { return g.is_single_qubit() || g.kind() == GateKind::CNOT; });
}

namespace {

constexpr double kPi = std::numbers::pi;

class Lowering {
public:
    explicit Lowering(Circuit& out) : out_(out) {}

    void gate(const Gate& g) {
        const auto ctl = g.controls();
        const int t = g.target();
        switch (g.kind()) {
            case GateKind::X:
            case GateKind::H:
            case GateKind::RY:
            case GateKind::Phase:
            case GateKind::CNOT:
                out_.add(g);
                break;
            case GateKind::CPhase:
                cphase(g.angle(), ctl[0], t);
                break;
            case GateKind::CRY:
                cry(g.angle(), ctl[0], t);
                break;
            case GateKind::CCRY:
                ccry(g.angle(), ctl[0], ctl[1], t);
                break;
            case GateKind::Toffoli:
                toffoli(ctl[0], ctl[1], t);
                break;
            case GateKind::MCX:
                mcx(std::vector<int>(ctl.begin(), ctl.end()), t);
                break;
        }
    }

private:
    void cnot(int c, int t) { out_.add(Gate::cnot(c, t)); }
    void phase(double l, int q) { out_.add(Gate::phase(l, q)); }

    void cphase(double lambda, int c, int t) {
        phase(lambda / 2, c);
        cnot(c, t);
        phase(-lambda / 2, t);
        cnot(c, t);
        phase(lambda / 2, t);
    }

    void cry(double theta, int c, int t) {
        out_.add(Gate::ry(theta / 2, t));
        cnot(c, t);
        out_.add(Gate::ry(-theta / 2, t));
        cnot(c, t);
    }

    void ccry(double theta, int c0, int c1, int t) {
        cry(theta / 2, c1, t);
        cnot(c0, c1);
        cry(-theta / 2, c1, t);
        cnot(c0, c1);
        cry(theta / 2, c0, t);
    }

    void toffoli(int a, int b, int t) {
        const double T = kPi / 4;
        out_.add(Gate::h(t));
        cnot(b, t);
        phase(-T, t);
        cnot(a, t);
        phase(T, t);
        cnot(b, t);
        phase(-T, t);
        cnot(a, t);
        phase(T, b);
        phase(T, t);
        out_.add(Gate::h(t));
        cnot(a, b);
        phase(T, a);
        phase(-T, b);
        cnot(a, b);
    }

    void mcx(std::vector<int> controls, int t) {
        if (controls.size() == 1) {
            cnot(controls[0], t);
        } else if (controls.size() == 2) {
            toffoli(controls[0], controls[1], t);
        } else {
            out_.add(Gate::h(t));
            mcphase(kPi, controls, t);
            out_.add(Gate::h(t));
        }
    }

    // Phase lambda on |1...1>_controls |1>_t.
    void mcphase(double lambda, std::span<const int> controls, int t) {
        if (controls.size() == 1) {
            cphase(lambda, controls[0], t);
            return;
        }
        const int last = controls.back();
        const auto rest = controls.first(controls.size() - 1);
        const int borrowed[] = {t};
        cphase(lambda / 2, last, t);
        mcx_borrowing(rest, last, borrowed);
        cphase(-lambda / 2, last, t);
        mcx_borrowing(rest, last, borrowed);
        mcphase(lambda / 2, rest, t);
    }

    // MCX using qubits in `borrowed` as dirty workspace; they are restored.
    void mcx_borrowing(std::span<const int> controls, int t, std::span<const int> borrowed) {
        const std::size_t k = controls.size();
        if (k == 1) {
            cnot(controls[0], t);
            return;
        }
        if (k == 2) {
            toffoli(controls[0], controls[1], t);
            return;
        }
        if (borrowed.size() >= k - 2) {
            toffoli_ladder(controls, t, borrowed.first(k - 2));
            return;
        }
        if (borrowed.empty()) throw std::logic_error("mcx_borrowing: no workspace qubit");
        // Split the controls; one borrowed qubit carries the first half's AND.
        const std::size_t k1 = (k + 1) / 2;
        const auto first = controls.first(k1);
        const auto second = controls.subspan(k1);
        const int b = borrowed[0];
        std::vector<int> second_plus_b(second.begin(), second.end());
        second_plus_b.push_back(b);
        std::vector<int> ws_first(second.begin(), second.end());
        ws_first.push_back(t);
        const std::vector<int> ws_second(first.begin(), first.end());
        for (int rep = 0; rep < 2; ++rep) {
            mcx_borrowing(first, b, ws_first);
            mcx_borrowing(second_plus_b, t, ws_second);
        }
    }

    // 4(k-2) Toffolis; `work` holds k-2 dirty qubits.
    void toffoli_ladder(std::span<const int> c, int t, std::span<const int> work) {
        const std::size_t m = c.size();
        auto top = [&] { toffoli(c[m - 1], work[m - 3], t); };
        auto down = [&] {
            for (std::size_t j = m - 2; j >= 2; --j) toffoli(c[j], work[j - 2], work[j - 1]);
        };
        auto up = [&] {
            for (std::size_t j = 2; j <= m - 2; ++j) toffoli(c[j], work[j - 2], work[j - 1]);
        };
        auto bottom = [&] { toffoli(c[0], c[1], work[0]); };
        for (int rep = 0; rep < 2; ++rep) {
            top();
            down();
            bottom();
            up();
        }
    }

    Circuit& out_;
};

}  // namespace

Circuit decompose_to_basis(const Circuit& c) {
    Circuit out(c.num_qubits(), c.label());
    Lowering lower(out);
    for (const Gate& g : c) lower.gate(g);
    return out;
}

}  // namespace encconv
