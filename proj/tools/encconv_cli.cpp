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

// encconv: build, verify and measure encoding converters from the shell.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <random>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "encconv/analysis.hpp"
#include "encconv/converters.hpp"
#include "encconv/dicke.hpp"
#include "encconv/encodings.hpp"
#include "encconv/qasm.hpp"

using namespace encconv;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFailed = 1;
constexpr int kExitUsage = 2;
constexpr int kMaxSimulatedQubits = 24;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

const std::map<std::string, Direction> kDirections{
    {"edick-to-onehot", Direction::EdickToOneHot},
    {"edick-to-binary", Direction::EdickToBinary},
    {"onehot-to-binary", Direction::OneHotToBinary},
    {"binary-to-onehot", Direction::BinaryToOneHot},
};
const std::map<std::string, EvenMethod> kMethods{
    {"recursion", EvenMethod::Recursion},
    {"expand-n1", EvenMethod::ExpandToNPlus1},
    {"expand-pow2", EvenMethod::ExpandToPow2},
};
const std::map<std::string, Encoding> kTargets{
    {"edick", Encoding::Edick},
    {"onehot", Encoding::OneHot},
    {"binary", Encoding::Binary},
};

std::string fmt(const char* spec, double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, spec, v);
    return buf;
}

// Writes to `path`, or to stdout for "" and "-".
template <typename F>
void with_output(const std::string& path, F&& write) {
    if (path.empty() || path == "-") {
        write(std::cout);
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw UsageError("cannot open '" + path + "' for writing");
    write(out);
    if (!out) throw std::runtime_error("write to '" + path + "' failed");
}

void require_simulable(const ConverterPlan& plan) {
    if (plan.total_qubits > kMaxSimulatedQubits) {
        throw UsageError("register of " + std::to_string(plan.total_qubits) + " qubits is too wide to simulate (max " +
                         std::to_string(kMaxSimulatedQubits) + ")");
    }
}

Statevector place(const ConverterPlan& plan, const AmplitudeVector& v, bool output) {
    Statevector::Vector amps = Statevector::Vector::Zero(static_cast<Eigen::Index>(BasisIndex{1} << plan.total_qubits));
    for (int i = 0; i < plan.levels; ++i) {
        const BasisIndex b = output ? plan.output_basis(i) : plan.input_basis(i);
        amps(static_cast<Eigen::Index>(b)) = v[i];
    }
    return Statevector::from_amplitudes(plan.total_qubits, std::move(amps));
}

// ---- build ----

struct BuildArgs {
    std::string direction = "edick-to-binary";
    int n = 0;
    std::string method = "expand-pow2";
    std::string out;
    std::string amplitudes;
    std::string dump;
};

int run_build(const BuildArgs& a) {
    const Converter conv = build_converter(kDirections.at(a.direction), a.n, kMethods.at(a.method));
    with_output(a.out, [&](std::ostream& os) { os << emit_text(conv.circuit); });

    if (!a.amplitudes.empty()) {
        std::ifstream in(a.amplitudes);
        if (!in) throw UsageError("cannot open '" + a.amplitudes + "'");
        const AmplitudeVector v = read_amplitudes(in);
        if (v.size() != a.n) {
            throw UsageError("amplitude file has " + std::to_string(v.size()) + " entries, expected " +
                             std::to_string(a.n));
        }
        require_simulable(conv.plan);
        Statevector s = place(conv.plan, v, false);
        s.run(conv.circuit);
        with_output(a.dump, [&](std::ostream& os) { write_csv(os, s); });
    }

    if (!a.out.empty() && a.out != "-") {
        const CostReport logical = cost(conv.circuit, Granularity::Logical, conv.plan.ancilla);
        const CostReport basis = cost(conv.circuit, Granularity::TwoQubitBasis, conv.plan.ancilla);
        std::cout << direction_name(conv.plan.direction) << " N=" << a.n << " method=" << a.method
                  << " qubits=" << conv.plan.total_qubits << " ancilla=" << conv.plan.ancilla
                  << " depth=" << logical.depth << '/' << basis.depth << " size=" << logical.size << '/'
                  << basis.size << '\n';
    }
    return kExitOk;
}

// ---- verify ----

struct VerifyArgs {
    std::string direction = "edick-to-binary";
    int n = 0;
    std::string method = "expand-pow2";
    int trials = 20;
    std::uint64_t seed = 1;
    double tolerance = 1e-9;
    bool complex_amplitudes = false;
};

int run_verify(const VerifyArgs& a) {
    const Converter conv = build_converter(kDirections.at(a.direction), a.n, kMethods.at(a.method));
    require_simulable(conv.plan);

    double worst = 1.0;
    int worst_level = 0;
    std::string worst_case = "none";

    for (int i = 0; i < a.n; ++i) {
        Statevector s = Statevector::basis(conv.plan.total_qubits, conv.plan.input_basis(i));
        s.run(conv.circuit);
        const double f = std::abs(s[conv.plan.output_basis(i)]);
        if (f < worst) {
            worst = f;
            worst_level = i;
            worst_case = "level " + std::to_string(i);
        }
    }

    std::mt19937_64 rng(a.seed);
    for (int t = 0; t < a.trials; ++t) {
        const AmplitudeVector v = AmplitudeVector::random(a.n, rng, a.complex_amplitudes);
        Statevector s = place(conv.plan, v, false);
        s.run(conv.circuit);
        const Statevector want = place(conv.plan, v, true);
        const double f = fidelity(s, want);
        if (f < worst) {
            worst = f;
            worst_case = "trial " + std::to_string(t);
            double err = -1;
            for (int i = 0; i < a.n; ++i) {
                const double e = std::abs(s[conv.plan.output_basis(i)] - v[i]);
                if (e > err) {
                    err = e;
                    worst_level = i;
                }
            }
        }
    }

    const bool ok = worst >= 1.0 - a.tolerance;
    std::cout << direction_name(conv.plan.direction) << " N=" << a.n << " method=" << a.method
              << " qubits=" << conv.plan.total_qubits << " ancilla=" << conv.plan.ancilla << '\n';
    std::cout << "checked " << a.n << " levels and " << a.trials << " random vectors (seed " << a.seed << ")\n";
    std::cout << "worst fidelity " << fmt("%.15f", worst) << " (" << worst_case << ", level " << worst_level
              << ")\n";
    std::cout << (ok ? "PASS" : "FAIL") << '\n';
    return ok ? kExitOk : kExitFailed;
}

// ---- sweep ----

struct SweepArgs {
    int n_min = 3;
    int n_max = 33;
    std::vector<int> ns;
    bool pow2_plus_one = false;
    std::vector<std::string> methods{"recursion", "expand-n1", "expand-pow2"};
    std::string granularity = "both";
    bool timing = false;
    std::string out;
};

int run_sweep_cmd(const SweepArgs& a) {
    std::vector<int> ns = a.ns;
    if (ns.empty()) {
        if (a.n_min > a.n_max) throw UsageError("--n-min must not exceed --n-max");
        for (int n = a.n_min; n <= a.n_max; ++n) {
            if (!a.pow2_plus_one || (n >= 3 && ((n - 1) & (n - 2)) == 0)) ns.push_back(n);
        }
    }
    std::vector<SweepSubject> subjects;
    for (const std::string& m : a.methods) {
        const auto s = parse_subject(m);
        if (!s) throw UsageError("unknown method '" + m + "'");
        subjects.push_back(*s);
    }
    SweepOptions opts;
    opts.logical = a.granularity != "basis";
    opts.basis = a.granularity != "logical";
    opts.timing = a.timing;
    const auto rows = run_sweep(ns, subjects, opts);
    with_output(a.out, [&](std::ostream& os) { write_sweep_csv(os, rows); });
    return kExitOk;
}

// ---- prepare-binomial ----

struct BinomialArgs {
    int n = 0;
    double p = 0.5;
    std::string target = "edick";
    std::string method = "expand-pow2";
    std::string out;
    std::string qasm;
};

int run_binomial(const BinomialArgs& a) {
    const BinomialSpec spec(a.n, a.p, kTargets.at(a.target), kMethods.at(a.method));
    const BinomialPipeline pipe = build_binomial_pipeline(spec);
    if (pipe.circuit.num_qubits() > kMaxSimulatedQubits) {
        throw UsageError("pipeline needs " + std::to_string(pipe.circuit.num_qubits()) + " qubits, too wide to simulate");
    }
    Statevector s(pipe.circuit.num_qubits());
    s.run(pipe.circuit);
    const std::vector<double> pmf = binomial_pmf(a.n, a.p);

    with_output(a.out, [&](std::ostream& os) {
        os << "level,probability,pmf,abs_error\n";
        for (int i = 0; i <= a.n; ++i) {
            const double prob = std::norm(s[pipe.level_basis[static_cast<std::size_t>(i)]]);
            const double f = pmf[static_cast<std::size_t>(i)];
            os << i << ',' << fmt("%.17g", prob) << ',' << fmt("%.17g", f) << ',' << fmt("%.3e", std::abs(prob - f))
               << '\n';
        }
    });
    if (!a.qasm.empty()) with_output(a.qasm, [&](std::ostream& os) { os << emit_text(pipe.circuit); });
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Convert between one-hot, binary and Edick amplitude encodings."};
    app.failure_message(CLI::FailureMessage::help);
    app.require_subcommand(1);

    BuildArgs build;
    auto* b = app.add_subcommand("build", "Write a converter circuit as OpenQASM 2.0");
    b->add_option("--direction", build.direction)->transform(CLI::IsMember(kDirections))->capture_default_str();
    b->add_option("--n", build.n, "Number of levels")->required()->check(CLI::Range(2, 1 << 20));
    b->add_option("--method", build.method)->transform(CLI::IsMember(kMethods))->capture_default_str();
    b->add_option("--out", build.out, "QASM output file (default stdout)");
    b->add_option("--amplitudes", build.amplitudes, "Run the circuit on this amplitude file")->check(CLI::ExistingFile);
    b->add_option("--dump", build.dump, "Statevector CSV for --amplitudes (default stdout)");

    VerifyArgs verify;
    auto* v = app.add_subcommand("verify", "Simulate a converter on every level and on random vectors");
    v->add_option("--direction", verify.direction)->transform(CLI::IsMember(kDirections))->capture_default_str();
    v->add_option("--n", verify.n, "Number of levels")->required()->check(CLI::Range(2, 1 << 20));
    v->add_option("--method", verify.method)->transform(CLI::IsMember(kMethods))->capture_default_str();
    v->add_option("--trials", verify.trials)->check(CLI::NonNegativeNumber)->capture_default_str();
    v->add_option("--seed", verify.seed)->capture_default_str();
    v->add_option("--tolerance", verify.tolerance, "Allowed 1 - fidelity")->check(CLI::Range(0.0, 1.0))
        ->capture_default_str();
    v->add_flag("--complex", verify.complex_amplitudes, "Draw complex random amplitudes");

    SweepArgs sweep;
    auto* s = app.add_subcommand("sweep", "Depth, size and ancilla over a range of N as CSV");
    s->add_option("--n-min", sweep.n_min)->check(CLI::Range(2, 1 << 20))->capture_default_str();
    s->add_option("--n-max", sweep.n_max)->check(CLI::Range(2, 1 << 20))->capture_default_str();
    s->add_option("--n", sweep.ns, "Explicit list of N (overrides the range)")->check(CLI::Range(2, 1 << 20))
        ->delimiter(',');
    s->add_flag("--pow2-plus-one", sweep.pow2_plus_one, "Keep only N = 2^k + 1 from the range");
    s->add_option("--methods", sweep.methods, "recursion, expand-n1, expand-pow2, uo, cnot-stair")
        ->delimiter(',')
        ->check(CLI::IsMember({"recursion", "expand-n1", "expand-pow2", "uo", "cnot-stair"}))
        ->capture_default_str();
    s->add_option("--granularity", sweep.granularity)
        ->check(CLI::IsMember({"logical", "basis", "both"}))
        ->capture_default_str();
    s->add_flag("--timing", sweep.timing, "Fill build_time_ms (output is then not reproducible)");
    s->add_option("--out", sweep.out, "CSV output file (default stdout)");

    BinomialArgs binom;
    auto* p = app.add_subcommand("prepare-binomial", "Prepare a binomial state and compare with the pmf");
    p->add_option("--n", binom.n, "Number of trials")->required()->check(CLI::Range(2, 1 << 20));
    p->add_option("--p", binom.p)->check(CLI::Range(0.0, 1.0))->capture_default_str();
    p->add_option("--target", binom.target)->transform(CLI::IsMember(kTargets))->capture_default_str();
    p->add_option("--method", binom.method)->transform(CLI::IsMember(kMethods))->capture_default_str();
    p->add_option("--out", binom.out, "CSV output file (default stdout)");
    p->add_option("--qasm", binom.qasm, "Also write the circuit here");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (*b) return run_build(build);
        if (*v) return run_verify(verify);
        if (*s) return run_sweep_cmd(sweep);
        if (*p) return run_binomial(binom);
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitFailed;
    }
    return kExitUsage;
}
