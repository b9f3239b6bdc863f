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

#include "doctest.h"

#include <random>
#include <sstream>
#include <stdexcept>

#include "encconv/encodings.hpp"
#include "support.hpp"

using namespace encconv;
using encconv::testing::bits;

TEST_CASE("level positions for each encoding") {
    CHECK(level_to_basis(Encoding::OneHot, 2, 4) == bits("0100"));
    CHECK(level_to_basis(Encoding::Binary, 5, 3) == bits("101"));
    CHECK(level_to_basis(Encoding::Edick, 3, 4) == bits("0111"));
    CHECK(level_to_basis(Encoding::Edick, 0, 4) == 0);
    CHECK_THROWS_AS(level_to_basis(Encoding::OneHot, 4, 4), std::out_of_range);
    CHECK_THROWS_AS(level_to_basis(Encoding::Binary, 8, 3), std::out_of_range);
    CHECK_THROWS_AS(level_to_basis(Encoding::Edick, 5, 4), std::out_of_range);
}

TEST_CASE("minimum widths") {
    CHECK(min_width(Encoding::OneHot, 5) == 5);
    CHECK(min_width(Encoding::Binary, 5) == 3);
    CHECK(min_width(Encoding::Binary, 8) == 3);
    CHECK(min_width(Encoding::Binary, 2) == 1);
    CHECK(min_width(Encoding::Edick, 5) == 4);
    CHECK(ceil_log2(1) == 0);
    CHECK(ceil_log2(1025) == 11);
}

TEST_CASE("amplitude vectors must be normalised") {
    CHECK_THROWS_AS(AmplitudeVector(std::vector<double>{1.0, 1.0}), std::invalid_argument);
    CHECK_THROWS_AS(AmplitudeVector(std::vector<double>{1.0}), std::invalid_argument);
    CHECK_NOTHROW(AmplitudeVector(std::vector<double>{0.6, 0.8}));
    CHECK(AmplitudeVector::uniform(9).alphas().norm() == doctest::Approx(1.0));
}

TEST_CASE("build then read returns the same vector for every encoding and width") {
    std::mt19937_64 rng(11);
    for (Encoding e : {Encoding::OneHot, Encoding::Binary, Encoding::Edick}) {
        for (int n = 2; n <= 9; ++n) {
            const AmplitudeVector v = AmplitudeVector::random(n, rng, true);
            for (int extra = 0; extra <= 2; ++extra) {
                const int w = min_width(e, n) + extra;
                const Statevector s = build_state(EncodingKind::of(e), v, w);
                CHECK(s.norm() == doctest::Approx(1.0));
                const AmplitudeVector back = read_state(e, s, n);
                CHECK((back.alphas() - v.alphas()).norm() < 1e-12);
            }
        }
    }
}

TEST_CASE("too narrow registers are refused") {
    CHECK_THROWS_AS(build_state(EncodingKind::of(Encoding::OneHot), AmplitudeVector::uniform(4), 3),
                    std::invalid_argument);
}

TEST_CASE("dicke states are uniform over weight k") {
    const Statevector d = dicke_state(4, 2);
    int support = 0;
    for (BasisIndex i = 0; i < d.dim(); ++i) {
        if (std::popcount(i) == 2) {
            CHECK(d[i].real() == doctest::Approx(1.0 / std::sqrt(6.0)));
            ++support;
        } else {
            CHECK(d[i] == std::complex<double>(0, 0));
        }
    }
    CHECK(support == 6);
    CHECK(build_state(EncodingKind::dicke(0), AmplitudeVector::uniform(2), 3)[0] == std::complex<double>(1, 0));
    CHECK_THROWS_AS(EncodingKind::dicke(1).encoding(), std::invalid_argument);
}

TEST_CASE("stray mass is reported") {
    Statevector s(2);
    s.apply(Gate::h(0));
    const std::vector<BasisIndex> idx{0, 1};
    CHECK(stray_mass(s, idx) == doctest::Approx(0.5));
    CHECK_THROWS_AS(read_levels(s, idx), std::runtime_error);
}

TEST_CASE("amplitude file round trip") {
    std::istringstream in("# header\n0.6\n\n 0.8 # tail\n");
    const AmplitudeVector v = read_amplitudes(in);
    CHECK(v.size() == 2);
    CHECK(v[1].real() == 0.8);

    std::mt19937_64 rng(3);
    const AmplitudeVector c = AmplitudeVector::random(5, rng, true);
    std::stringstream io;
    write_amplitudes(io, c);
    CHECK((read_amplitudes(io).alphas() - c.alphas()).norm() == 0.0);

    std::istringstream bad("0.6\nzero\n");
    CHECK_THROWS_AS(read_amplitudes(bad), std::invalid_argument);
}
