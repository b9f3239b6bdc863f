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

#include <array>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>
#include <sys/wait.h>

#include "encconv/qasm.hpp"

namespace {

struct Result {
    int code = -1;
    std::string out;
};

Result cli(const std::string& args) {
    const std::string cmd = std::string(ENCCONV_CLI_PATH) + " " + args + " 2>/dev/null";
    Result r;
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::array<char, 4096> buf{};
    std::size_t got = 0;
    while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), got);
    const int status = pclose(pipe);
    r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

std::string slurp(const std::filesystem::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::filesystem::path scratch(const std::string& name) {
    const auto dir = std::filesystem::temp_directory_path() / "encconv_cli_test";
    std::filesystem::create_directories(dir);
    return dir / name;
}

}  // namespace

TEST_CASE("build writes a parseable circuit") {
    const auto path = scratch("c.qasm");
    const Result r = cli("build --direction onehot-to-binary --n 7 --method recursion --out " + path.string());
    CHECK(r.code == 0);
    const encconv::Circuit c = encconv::parse_text(slurp(path));
    CHECK(c.num_qubits() == 7);
    CHECK(c.size() > 0);
}

TEST_CASE("build runs an amplitude file") {
    const auto amps = scratch("amps.txt");
    std::ofstream(amps) << "0.6\n0\n0\n0.8\n";
    const Result r = cli("build --direction edick-to-binary --n 4 --method recursion --out - --amplitudes " +
                         amps.string() + " --dump " + scratch("state.csv").string());
    CHECK(r.code == 0);
    const std::string csv = slurp(scratch("state.csv"));
    std::istringstream in(csv);
    std::string line;
    std::getline(in, line);
    CHECK(line == "index,real,imag");
    std::vector<double> re;
    while (std::getline(in, line)) re.push_back(std::stod(line.substr(line.find(',') + 1)));
    REQUIRE(re.size() == 8);
    CHECK(re[0] == doctest::Approx(0.6));
    CHECK(re[3] == doctest::Approx(0.8));
}

TEST_CASE("verify passes and reports the worst fidelity") {
    const Result r = cli("verify --direction edick-to-binary --n 7 --method expand-pow2 --trials 20 --seed 1");
    CHECK(r.code == 0);
    CHECK(r.out.find("worst fidelity 1.0000000000") != std::string::npos);
    CHECK(r.out.ends_with("PASS\n"));
}

TEST_CASE("verify fails when the tolerance cannot be met") {
    const Result r = cli("verify --direction onehot-to-binary --n 5 --tolerance 0 --trials 50 --seed 3 --complex");
    // rounding alone leaves the fidelity a few ulps below 1
    CHECK(r.code == 1);
    CHECK(r.out.ends_with("FAIL\n"));
}

TEST_CASE("prepare-binomial rows agree with the pmf") {
    const auto path = scratch("probs.csv");
    const Result r = cli("prepare-binomial --n 6 --p 0.3 --target binary --out " + path.string());
    REQUIRE(r.code == 0);
    std::istringstream in(slurp(path));
    std::string line;
    std::getline(in, line);
    CHECK(line == "level,probability,pmf,abs_error");
    int rows = 0;
    while (std::getline(in, line)) {
        const double err = std::stod(line.substr(line.rfind(',') + 1));
        CHECK(err < 1e-9);
        ++rows;
    }
    CHECK(rows == 7);
}

TEST_CASE("sweep writes the csv header and one row per N and method") {
    const Result r = cli("sweep --n 5,9 --methods uo,recursion");
    CHECK(r.code == 0);
    CHECK(r.out.starts_with("N,method,depth_logical,depth_basis,size_logical,size_basis,ancilla,build_time_ms\n"));
    CHECK(std::count(r.out.begin(), r.out.end(), '\n') == 5);
    CHECK(cli("sweep --n-min 3 --n-max 17 --pow2-plus-one --methods uo").out.find("\n17,uo,") != std::string::npos);
}

TEST_CASE("argument errors exit with 2") {
    CHECK(cli("").code == 2);
    CHECK(cli("verify --n 1").code == 2);
    CHECK(cli("verify --n 5 --method sideways").code == 2);
    CHECK(cli("prepare-binomial --n 4 --p 1.5").code == 2);
    CHECK(cli("sweep --n-min 9 --n-max 3").code == 2);
    CHECK(cli("verify --n 40").code == 2);
    CHECK(cli("build --n 4 --nonsense").code == 2);
    CHECK(cli("--help").code == 0);
}
