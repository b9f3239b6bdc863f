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

#include "encconv/converters.hpp"

#include <map>
#include <numbers>
#include <stdexcept>
#include <string>
#include <vector>

#include "encconv/encodings.hpp"

namespace encconv {

const char* method_name(EvenMethod m) {
    switch (m) {
        case EvenMethod::Recursion: return "recursion";
        case EvenMethod::ExpandToNPlus1: return "expand-n1";
        case EvenMethod::ExpandToPow2: return "expand-pow2";
    }
    return "?";
}

const char* direction_name(Direction d) {
    switch (d) {
        case Direction::EdickToOneHot: return "edick-to-onehot";
        case Direction::EdickToBinary: return "edick-to-binary";
        case Direction::OneHotToBinary: return "onehot-to-binary";
        case Direction::BinaryToOneHot: return "binary-to-onehot";
    }
    return "?";
}

std::optional<EvenMethod> parse_method(std::string_view s) {
    for (auto m : {EvenMethod::Recursion, EvenMethod::ExpandToNPlus1, EvenMethod::ExpandToPow2}) {
        if (s == method_name(m)) return m;
    }
    return std::nullopt;
}

std::optional<Direction> parse_direction(std::string_view s) {
    for (auto d : {Direction::EdickToOneHot, Direction::EdickToBinary, Direction::OneHotToBinary,
                   Direction::BinaryToOneHot}) {
        if (s == direction_name(d)) return d;
    }
    return std::nullopt;
}

int ConverterPlan::input_qubits() const {
    switch (direction) {
        case Direction::EdickToOneHot:
        case Direction::EdickToBinary:
            return levels - 1;
        case Direction::OneHotToBinary:
            return levels;
        case Direction::BinaryToOneHot:
            return ceil_log2(levels);
    }
    return levels;
}

BasisIndex ConverterPlan::input_basis(int level) const {
    if (level < 0 || level >= levels) throw std::out_of_range("level out of range");
    const auto i = static_cast<BasisIndex>(level);
    switch (direction) {
        case Direction::EdickToOneHot: return (BasisIndex{2} << i) - 1;
        case Direction::EdickToBinary: return (BasisIndex{1} << i) - 1;
        case Direction::OneHotToBinary: return BasisIndex{1} << i;
        case Direction::BinaryToOneHot: return (i << 1) | 1;
    }
    return 0;
}

BasisIndex ConverterPlan::output_basis(int level) const {
    if (level < 0 || level >= levels) throw std::out_of_range("level out of range");
    const auto i = static_cast<BasisIndex>(level);
    switch (direction) {
        case Direction::EdickToOneHot: return BasisIndex{1} << i;
        case Direction::EdickToBinary: return i;
        case Direction::OneHotToBinary: return (i << 1) | 1;
        case Direction::BinaryToOneHot: return BasisIndex{1} << i;
    }
    return 0;
}

namespace {

void require_levels(int n) {
    if (n < 2) throw std::invalid_argument("converter needs N >= 2 levels, got " + std::to_string(n));
}

// U_O on the qubits listed in `p` (p[0] leftmost).
void emit_uo(Circuit& c, const std::vector<int>& p) {
    const std::size_t n = p.size();
    if (n == 2) {
        c.add(Gate::cnot(p[0], p[1]));
        return;
    }
    if (n % 2 == 1) {
        emit_uo(c, std::vector<int>(p.begin() + 1, p.end()));
        c.add(Gate::cnot(p[0], p[1]));
        return;
    }
    std::vector<int> evens;
    for (std::size_t j = 0; j < n / 2; ++j) {
        c.add(Gate::cnot(p[2 * j], p[2 * j + 1]));
        evens.push_back(p[2 * j]);
    }
    emit_uo(c, evens);
    for (std::size_t j = 0; j + 1 < n / 2; ++j) c.add(Gate::cnot(p[2 * j + 1], p[2 * j + 2]));
}

bool is_pow2_plus_one(int n) {
    const int m = n - 1;
    return m >= 1 && (m & (m - 1)) == 0;
}

int pow2_plus_one_at_least(int n) {
    int m = 1;
    while (m + 1 < n) m <<= 1;
    return m + 1;
}

/// Builds U_B for one method, caching sub-converters for the current call.
class UbBuilder {
public:
    explicit UbBuilder(EvenMethod method) : method_(method) {}

    const Converter& get(int n) {
        if (auto it = cache_.find(n); it != cache_.end()) return it->second;
        Converter c = make(n);
        return cache_.emplace(n, std::move(c)).first->second;
    }

private:
    ConverterPlan plan(int n, int ancilla) const {
        ConverterPlan p;
        p.levels = n;
        p.method = method_;
        p.direction = Direction::EdickToBinary;
        p.ancilla = ancilla;
        p.total_qubits = n - 1 + ancilla;
        return p;
    }

    Converter make(int n) {
        if (n == 2) return {Circuit(1, "ub2"), plan(2, 0)};
        if (n == 3) {
            Circuit c(2, "ub3");
            c.add(Gate::cnot(0, 1));
            return {c, plan(3, 0)};
        }
        if (method_ == EvenMethod::ExpandToPow2 && !is_pow2_plus_one(n)) {
            return expand(n, pow2_plus_one_at_least(n));
        }
        if (n % 2 == 1) return odd(n);
        if (method_ == EvenMethod::ExpandToNPlus1) return expand(n, n + 1);
        return build_recursion_step(n, get(n - 1));
    }

    // An Edick state of n levels padded with |0> on the left is an Edick state
    // of `bigger` levels that never reaches the extra levels.
    Converter expand(int n, int bigger) {
        const Converter& sub = get(bigger);
        Converter out{sub.circuit, plan(n, sub.plan.total_qubits - (n - 1))};
        out.circuit.set_label("ub" + std::to_string(n));
        return out;
    }

    Converter odd(int n) {
        const int h = (n - 1) / 2;
        const Converter& sub = get(h + 1);
        const int sa = sub.plan.ancilla;
        const int width = 2 * sa + 2 * h;
        Circuit c(width, "ub" + std::to_string(n));

        // [ancilla of first half][ancilla of second half][first half][second half]
        std::vector<int> first_map = qubit_range(0, sa);
        std::vector<int> second_map = qubit_range(sa, sa);
        for (int q = 0; q < h; ++q) {
            first_map.push_back(2 * sa + q);
            second_map.push_back(2 * sa + h + q);
        }
        c.append_mapped(sub.circuit, first_map);
        c.append_mapped(sub.circuit, second_map);

        const int m = ceil_log2(h);
        const long long d = (1LL << m) - h;
        if (d < 0 || d >= (1LL << m)) throw std::logic_error("adder offset out of range");
        auto bit = [&](int j) { return width - 1 - j; };              // significance 2^j, whole register
        auto first_bit = [&](int j) { return 2 * sa + h - 1 - j; };  // significance 2^j, first half

        const std::vector<int> adder_map = qubit_range(width - 1 - m, m + 1);
        std::optional<Circuit> adder;
        if (d > 0) {
            adder = build_adder(m + 1, d);
            c.append_mapped(*adder, adder_map);
        }
        // After the adder the second half reads i + d for i < h and exactly
        // 2^m for i >= h; copy the first half's low bits under that flag and
        // clear them.
        for (int j = 0; j < m; ++j) c.add(Gate::cnot(first_bit(j), bit(j)));
        for (int j = 0; j < m; ++j) c.add(Gate::toffoli(bit(m), bit(j), first_bit(j)));
        if (d > 0) {
            c.append_mapped(inverse(*adder), adder_map);
        } else {
            // Level N-1 = 2^(m+1) is left as 2^m in both halves.
            c.add(Gate::cnot(first_bit(m), bit(m + 1)));
            c.add(Gate::cnot(bit(m + 1), first_bit(m)));
            c.add(Gate::cnot(bit(m + 1), bit(m)));
        }
        return {c, plan(n, 2 * sa)};
    }

    EvenMethod method_;
    std::map<int, Converter> cache_;
};

}  // namespace

Circuit build_uo(int n) {
    require_levels(n);
    Circuit c(n, "uo" + std::to_string(n));
    emit_uo(c, qubit_range(0, n));
    return c;
}

Circuit build_adder(int n, long long d) {
    if (n < 1 || n > 62) throw std::invalid_argument("adder width out of range");
    const long long modulus = 1LL << n;
    d %= modulus;
    if (d < 0) d += modulus;

    Circuit qft(n);
    for (int q = 0; q < n; ++q) {
        qft.add(Gate::h(q));
        for (int t = 1; q + t < n; ++t) qft.add(Gate::cphase(std::numbers::pi / static_cast<double>(1LL << t), q + t, q));
    }
    // Qubit q now carries the phase exp(2 pi i j 2^q / 2^n).
    Circuit c = qft;
    c.set_label("adder" + std::to_string(n) + "+" + std::to_string(d));
    for (int q = 0; q < n; ++q) {
        const long long k = (d << q) % modulus;
        if (k != 0) c.add(Gate::phase(2.0 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(modulus), q));
    }
    c.append(inverse(qft));
    return c;
}

Converter build_recursion_step(int n, const Converter& sub) {
    if (n < 4 || n % 2 != 0) throw std::invalid_argument("recursion step needs an even N >= 4");
    if (sub.plan.levels != n - 1 || sub.plan.direction != Direction::EdickToBinary) {
        throw std::invalid_argument("recursion step needs U_B for N-1 levels");
    }
    const int sa = sub.plan.ancilla;
    const int width = n - 1 + sa;
    const int top = sa;
    Circuit c(width, "ub" + std::to_string(n));

    std::vector<int> map = qubit_range(0, sa);
    for (int q = 0; q < n - 2; ++q) map.push_back(sa + 1 + q);
    c.append_mapped(sub.circuit, map);

    const int r = ceil_log2(n);
    const unsigned long target = static_cast<unsigned long>(n - 1);
    const unsigned long diff = target ^ static_cast<unsigned long>(n - 2);
    auto bit = [&](int j) { return width - 1 - j; };
    for (int j = 0; j < r; ++j) {
        if ((diff >> j) & 1UL) c.add(Gate::cnot(top, bit(j)));
    }
    std::vector<int> controls;
    for (int j = r - 1; j >= 0; --j) controls.push_back(bit(j));
    for (int j = 0; j < r; ++j) {
        if (!((target >> j) & 1UL)) c.add(Gate::x(bit(j)));
    }
    if (controls.size() == 2) {
        c.add(Gate::toffoli(controls[0], controls[1], top));
    } else if (controls.size() == 1) {
        c.add(Gate::cnot(controls[0], top));
    } else {
        c.add(Gate::mcx(controls, top));
    }
    for (int j = 0; j < r; ++j) {
        if (!((target >> j) & 1UL)) c.add(Gate::x(bit(j)));
    }

    ConverterPlan p;
    p.levels = n;
    p.method = sub.plan.method;
    p.direction = Direction::EdickToBinary;
    p.ancilla = sa;
    p.total_qubits = width;
    return {c, p};
}

Converter build_ub(int n, EvenMethod method) {
    require_levels(n);
    UbBuilder builder(method);
    Converter out = builder.get(n);
    out.plan.method = method;
    return out;
}

Converter build_onehot_to_binary(int n, EvenMethod method) {
    const Converter ub = build_ub(n, method);
    const int a = ub.plan.ancilla;
    const int width = n + a;
    Circuit c(width, "onehot-to-binary" + std::to_string(n));
    c.append_mapped(inverse(build_uo(n)), qubit_range(a, n));
    c.append_mapped(ub.circuit, qubit_range(0, ub.plan.total_qubits));

    ConverterPlan p;
    p.levels = n;
    p.method = method;
    p.direction = Direction::OneHotToBinary;
    p.total_qubits = width;
    p.ancilla = width - p.input_qubits();
    return {c, p};
}

Converter build_binary_to_onehot(int n, EvenMethod method) {
    const Converter forward = build_onehot_to_binary(n, method);
    Converter out{inverse(forward.circuit), forward.plan};
    out.circuit.set_label("binary-to-onehot" + std::to_string(n));
    out.plan.direction = Direction::BinaryToOneHot;
    out.plan.ancilla = out.plan.total_qubits - out.plan.input_qubits();
    return out;
}

Circuit build_cnot_stair(int n) {
    require_levels(n);
    Circuit c(n, "cnot-stair" + std::to_string(n));
    // Row c turns every later qubit t into x_t ^ x_c (running), leaving
    // x_t ^ x_(t-1) once all rows have run.
    for (int ctl = 0; ctl + 1 < n; ++ctl) {
        for (int t = ctl + 1; t < n; ++t) c.add(Gate::cnot(ctl, t));
    }
    return c;
}

Converter build_converter(Direction direction, int n, EvenMethod method) {
    switch (direction) {
        case Direction::EdickToOneHot: {
            ConverterPlan p;
            p.levels = n;
            p.method = method;
            p.direction = direction;
            p.total_qubits = n;
            p.ancilla = 1;  // the |1> flag
            return {build_uo(n), p};
        }
        case Direction::EdickToBinary: return build_ub(n, method);
        case Direction::OneHotToBinary: return build_onehot_to_binary(n, method);
        case Direction::BinaryToOneHot: return build_binary_to_onehot(n, method);
    }
    throw std::invalid_argument("unknown direction");
}

}  // namespace encconv
