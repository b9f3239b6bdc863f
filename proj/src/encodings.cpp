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

#include "encconv/encodings.hpp"

#include <bit>
#include <cctype>
#include <charconv>
#include <cmath>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace encconv {

const char* encoding_name(Encoding e) {
    switch (e) {
        case Encoding::OneHot: return "onehot";
        case Encoding::Binary: return "binary";
        case Encoding::Edick: return "edick";
    }
    return "?";
}

EncodingKind EncodingKind::of(Encoding e) {
    switch (e) {
        case Encoding::OneHot: return {Tag::OneHot, 0};
        case Encoding::Binary: return {Tag::Binary, 0};
        case Encoding::Edick: return {Tag::Edick, 0};
    }
    return {};
}

Encoding EncodingKind::encoding() const {
    switch (tag) {
        case Tag::OneHot: return Encoding::OneHot;
        case Tag::Binary: return Encoding::Binary;
        case Tag::Edick: return Encoding::Edick;
        case Tag::Dicke: break;
    }
    throw std::invalid_argument("Dicke states have no level map");
}

AmplitudeVector::AmplitudeVector(Vector alphas) : alphas_(std::move(alphas)) {
    if (alphas_.size() < 2) throw std::invalid_argument("amplitude vector needs N >= 2");
    if (!alphas_.allFinite()) throw std::invalid_argument("amplitude vector has non-finite entries");
    if (std::abs(alphas_.squaredNorm() - 1.0) > kNormTolerance) {
        throw std::invalid_argument("amplitude vector is not normalised (|v|^2 = " +
                                    std::to_string(alphas_.squaredNorm()) + ")");
    }
}

AmplitudeVector::AmplitudeVector(std::span<const double> alphas)
    : AmplitudeVector([&] {
          Vector v(static_cast<Eigen::Index>(alphas.size()));
          for (std::size_t i = 0; i < alphas.size(); ++i) v(static_cast<Eigen::Index>(i)) = alphas[i];
          return v;
      }()) {}

AmplitudeVector AmplitudeVector::uniform(int n) {
    if (n < 2) throw std::invalid_argument("amplitude vector needs N >= 2");
    return AmplitudeVector(Vector::Constant(n, 1.0 / std::sqrt(static_cast<double>(n))));
}

AmplitudeVector AmplitudeVector::level(int n, int i) {
    if (n < 2) throw std::invalid_argument("amplitude vector needs N >= 2");
    if (i < 0 || i >= n) throw std::out_of_range("level out of range");
    Vector v = Vector::Zero(n);
    v(i) = 1.0;
    return AmplitudeVector(std::move(v));
}

AmplitudeVector AmplitudeVector::random(int n, std::mt19937_64& rng, bool complex_entries) {
    if (n < 2) throw std::invalid_argument("amplitude vector needs N >= 2");
    std::normal_distribution<double> gauss(0.0, 1.0);
    Vector v(n);
    for (int i = 0; i < n; ++i) {
        const double re = gauss(rng);
        const double im = complex_entries ? gauss(rng) : 0.0;
        v(i) = {re, im};
    }
    v /= v.norm();
    return AmplitudeVector(std::move(v));
}

int ceil_log2(long n) {
    if (n < 1) throw std::invalid_argument("ceil_log2 of non-positive value");
    return static_cast<int>(std::bit_width(static_cast<unsigned long>(n - 1)));
}

int min_width(Encoding e, int n) {
    if (n < 2) throw std::invalid_argument("encoding needs N >= 2");
    switch (e) {
        case Encoding::OneHot: return n;
        case Encoding::Binary: return ceil_log2(n);
        case Encoding::Edick: return n - 1;
    }
    return n;
}

BasisIndex level_to_basis(Encoding e, int level, int width) {
    if (level < 0) throw std::out_of_range("negative level");
    if (width < 1 || width > 63) throw std::out_of_range("register width out of range");
    BasisIndex index = 0;
    switch (e) {
        case Encoding::OneHot:
            if (level >= width) throw std::out_of_range("one-hot level needs more qubits");
            index = BasisIndex{1} << level;
            break;
        case Encoding::Binary:
            index = static_cast<BasisIndex>(level);
            if (index >> width != 0) throw std::out_of_range("binary level needs more qubits");
            break;
        case Encoding::Edick:
            if (level > width) throw std::out_of_range("Edick level needs more qubits");
            index = (BasisIndex{1} << level) - 1;
            break;
    }
    return index;
}

Statevector dicke_state(int width, int k) {
    if (k < 0 || k > width) throw std::out_of_range("Dicke weight out of range");
    Statevector::Vector amps = Statevector::Vector::Zero(static_cast<Eigen::Index>(BasisIndex{1} << width));
    double count = 0;
    for (BasisIndex i = 0; i < (BasisIndex{1} << width); ++i) {
        if (std::popcount(i) == k) count += 1;
    }
    const double a = 1.0 / std::sqrt(count);
    for (BasisIndex i = 0; i < (BasisIndex{1} << width); ++i) {
        if (std::popcount(i) == k) amps(static_cast<Eigen::Index>(i)) = a;
    }
    return Statevector::from_amplitudes(width, std::move(amps));
}

Statevector build_state(EncodingKind kind, const AmplitudeVector& v, int width) {
    if (kind.is_dicke()) return dicke_state(width, kind.weight);
    const Encoding e = kind.encoding();
    if (width < min_width(e, v.size())) {
        throw std::invalid_argument(std::string(encoding_name(e)) + " encoding of " + std::to_string(v.size()) +
                                    " levels needs at least " + std::to_string(min_width(e, v.size())) + " qubits");
    }
    Statevector::Vector amps = Statevector::Vector::Zero(static_cast<Eigen::Index>(BasisIndex{1} << width));
    for (int i = 0; i < v.size(); ++i) amps(static_cast<Eigen::Index>(level_to_basis(e, i, width))) = v[i];
    return Statevector::from_amplitudes(width, std::move(amps));
}

double stray_mass(const Statevector& s, std::span<const BasisIndex> level_indices) {
    double inside = 0;
    for (BasisIndex i : level_indices) inside += std::norm(s[i]);
    return std::max(0.0, s.amplitudes().squaredNorm() - inside);
}

AmplitudeVector read_levels(const Statevector& s, std::span<const BasisIndex> level_indices,
                            double stray_tolerance) {
    const double stray = stray_mass(s, level_indices);
    if (stray > stray_tolerance) {
        throw std::runtime_error("state has probability " + std::to_string(stray) + " outside the level positions");
    }
    AmplitudeVector::Vector v(static_cast<Eigen::Index>(level_indices.size()));
    for (std::size_t i = 0; i < level_indices.size(); ++i) v(static_cast<Eigen::Index>(i)) = s[level_indices[i]];
    v /= v.norm();
    return AmplitudeVector(std::move(v));
}

AmplitudeVector read_state(Encoding e, const Statevector& s, int n, double stray_tolerance) {
    std::vector<BasisIndex> idx;
    idx.reserve(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) idx.push_back(level_to_basis(e, i, s.num_qubits()));
    return read_levels(s, idx, stray_tolerance);
}

namespace {

double parse_double(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    double v = 0;
    auto res = std::from_chars(s.data(), s.data() + s.size(), v);
    if (res.ec != std::errc() || res.ptr != s.data() + s.size()) {
        throw std::invalid_argument("bad number '" + std::string(s) + "' in amplitude file");
    }
    return v;
}

}  // namespace

AmplitudeVector read_amplitudes(std::istream& is) {
    std::vector<std::complex<double>> values;
    std::string line;
    while (std::getline(is, line)) {
        std::string_view sv(line);
        if (auto hash = sv.find('#'); hash != std::string_view::npos) sv = sv.substr(0, hash);
        if (sv.find_first_not_of(" \t\r") == std::string_view::npos) continue;
        if (auto comma = sv.find(','); comma != std::string_view::npos) {
            values.emplace_back(parse_double(sv.substr(0, comma)), parse_double(sv.substr(comma + 1)));
        } else {
            values.emplace_back(parse_double(sv), 0.0);
        }
    }
    AmplitudeVector::Vector v(static_cast<Eigen::Index>(values.size()));
    for (std::size_t i = 0; i < values.size(); ++i) v(static_cast<Eigen::Index>(i)) = values[i];
    return AmplitudeVector(std::move(v));
}

void write_amplitudes(std::ostream& os, const AmplitudeVector& v) {
    const bool real = (v.alphas().imag().array() == 0.0).all();
    const auto old = os.precision(17);
    for (int i = 0; i < v.size(); ++i) {
        if (real) {
            os << v[i].real() << '\n';
        } else {
            os << v[i].real() << ',' << v[i].imag() << '\n';
        }
    }
    os.precision(old);
}

}  // namespace encconv
