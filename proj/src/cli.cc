// Copyright 2026 The gkp-magic Authors
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

#include "gkp/cli.hpp"

#include <fmt/format.h>

#include <CLI11.hpp>
#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <map>
#include <optional>
#include <ostream>
#include <random>
#include <sstream>
#include <stdexcept>

#include "gkp/ideal_lattice.hpp"
#include "gkp/injection.hpp"
#include "gkp/preparation.hpp"
#include "gkp/standard_form.hpp"
#include "gkp/wigner_negativity.hpp"

namespace gkp::cli {
namespace {

class IoError : public std::runtime_error {
    using std::runtime_error::runtime_error;
};

class UsageError : public std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

constexpr double kFidelityThreshold = 1.0 - 1e-12;

std::string trim(const std::string& s) {
    auto b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos) return {};
    auto e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}

double parse_double(const std::string& text) {
    double v = 0.0;
    const char* last = text.data() + text.size();
    auto [ptr, ec] = std::from_chars(text.data(), last, v);
    if (ec != std::errc() || ptr != last || text.empty()) {
        throw std::invalid_argument(fmt::format("not a number: '{}'", text));
    }
    return v;
}

std::vector<std::pair<std::string, std::string>> read_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw IoError(fmt::format("cannot read config file '{}'", path));
    std::vector<std::pair<std::string, std::string>> kv;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        line = trim(line);
        if (line.empty()) continue;
        auto eq = line.find('=');
        if (eq == std::string::npos) {
            throw UsageError(fmt::format("{}:{}: expected key=value", path, lineno));
        }
        kv.emplace_back(trim(line.substr(0, eq)), trim(line.substr(eq + 1)));
    }
    return kv;
}

std::ofstream open_output(const std::string& path) {
    std::ofstream f(path, std::ios::binary | std::ios::trunc);
    if (!f) throw IoError(fmt::format("cannot open '{}' for writing", path));
    return f;
}

void write_output(const std::string& path, const std::string& text, std::ostream& fallback) {
    if (path.empty()) {
        fallback << text;
        return;
    }
    std::ofstream f = open_output(path);
    f << text;
    f.flush();
    if (!f) throw IoError(fmt::format("failed writing '{}'", path));
}

std::string comb_dump(const ModeComb& comb) {
    std::string s;
    for (const auto& p : comb.packets()) {
        s += fmt::format("{:.17g} {:.17g} {:.17g} {:.17g}\n", p.center, p.amplitude.real(), p.amplitude.imag(),
                         p.width);
    }
    return s;
}

std::vector<int> parse_bits(const std::string& text) {
    std::vector<int> bits;
    for (char c : text) {
        if (c == '0' || c == '1') {
            bits.push_back(c - '0');
        } else if (c != ',' && c != ' ') {
            throw UsageError(fmt::format("outcomes must be a string of 0/1, got '{}'", text));
        }
    }
    return bits;
}

std::string bits_string(const std::vector<int>& bits) {
    std::string s;
    for (int b : bits) s += static_cast<char>('0' + b);
    return s;
}

// ---------------------------------------------------------------------------

struct SweepOptions {
    std::string grid = "4:18:2";
    double cell = kDefaultCell;
    int points = kDefaultGaussOrder;
    double tail_tol = kDefaultTailTol;
    double theta_tol = kDefaultThetaTol;
    std::string out;
    bool log_negativity = false;
};

int cmd_sweep(const SweepOptions& o, std::ostream& out) {
    std::vector<double> grid = parse_grid(o.grid);
    SweepPolicy policy{o.cell, o.points, o.tail_tol, o.theta_tol};
    std::vector<NegativityRow> rows = negativity_sweep(grid, policy);
    std::string csv = "db,sigma2,neg_zero,neg_h";
    if (o.log_negativity) csv += ",log_neg_zero,log_neg_h";
    csv += '\n';
    for (const auto& r : rows) {
        csv += fmt::format("{:.10g},{:.10g},{:.10g},{:.10g}", r.db, r.sigma2, r.neg_zero, r.neg_h);
        if (o.log_negativity) csv += fmt::format(",{:.10g},{:.10g}", std::log(r.neg_zero), std::log(r.neg_h));
        csv += '\n';
    }
    write_output(o.out, csv, out);
    return kSuccess;
}

// ---------------------------------------------------------------------------

struct IdealOptions {
    std::vector<std::string> states;
    std::string out;
};

double ideal_negativity(IdealState s) {
    return unit_cell_negativity(lattice_for(s), DeltaLattice::unit() / 2.0);
}

double product_negativity(const std::vector<std::string>& names) {
    double v = 1.0;
    for (const auto& n : names) v *= ideal_negativity(parse_ideal_state(n));
    return v;
}

std::string join(const std::vector<std::string>& v) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? " " : "") + v[i];
    return s;
}

int cmd_ideal(const IdealOptions& o, std::ostream& out) {
    std::vector<std::string> tokens = o.states;
    if (tokens.empty()) {
        for (IdealState s : {IdealState::zero, IdealState::one, IdealState::plus, IdealState::minus,
                             IdealState::h, IdealState::pi8}) {
            tokens.emplace_back(ideal_state_name(s));
        }
    }
    std::vector<std::string> num;
    std::vector<std::string> den;
    bool has_slash = false;
    for (const auto& t : tokens) {
        if (t == "/") {
            if (has_slash) throw UsageError("at most one '/' is allowed");
            has_slash = true;
            continue;
        }
        try {
            parse_ideal_state(t);
        } catch (const std::invalid_argument&) {
            throw UsageError(fmt::format("unknown state '{}'", t));
        }
        (has_slash ? den : num).push_back(t);
    }
    if (has_slash && (num.empty() || den.empty())) throw UsageError("'/' needs states on both sides");

    std::string report;
    std::vector<std::string> seen;
    std::string dump;
    for (const auto& list : {num, den}) {
        for (const auto& t : list) {
            if (std::find(seen.begin(), seen.end(), t) != seen.end()) continue;
            seen.push_back(t);
            IdealState s = parse_ideal_state(t);
            report += fmt::format("N({})={:.12f}\n", t, ideal_negativity(s));
            dump += fmt::format("# {}\n", t);
            const DeltaLattice lattice = lattice_for(s);
            for (const auto& e : lattice.entries()) {
                dump += fmt::format("{} {} {:.17g}\n", e.coords[0].q, e.coords[0].p, e.weight);
            }
        }
    }
    if (has_slash) {
        report += fmt::format("ratio [{} / {}]={:.12f}\n", join(num), join(den),
                              product_negativity(num) / product_negativity(den));
    }
    report += fmt::format("ratio [h / zero]={:.12f}\n", product_negativity({"h"}) / product_negativity({"zero"}));
    report += fmt::format("ratio [h h / zero zero zero]={:.12f}\n",
                          product_negativity({"h", "h"}) / product_negativity({"zero", "zero", "zero"}));
    out << report;
    if (!o.out.empty()) write_output(o.out, dump, out);
    return kSuccess;
}

// ---------------------------------------------------------------------------

struct InjectOptions {
    std::uint64_t seed = 1;
    int inputs = 32;
    int shots = 0;
    bool branches = false;
};

int cmd_inject(const InjectOptions& o, std::ostream& out, std::ostream& err) {
    if (o.inputs < 1) throw UsageError("--inputs must be at least 1");
    if (o.shots < 0) throw UsageError("--shots must be non-negative");
    std::mt19937_64 rng(o.seed);
    std::vector<QubitRegister> inputs = {QubitRegister::basis(1, 0), QubitRegister::basis(1, 1)};
    while (static_cast<int>(inputs.size()) < o.inputs + 2) inputs.push_back(random_qubit(rng));

    std::string branch_dump;
    double t_min = 1.0;
    for (std::size_t i = 0; i < inputs.size(); ++i) {
        QubitRegister expected = inputs[i];
        expected.apply(gates::t(), 0);
        for (int m : {0, 1}) {
            InjectionResult r = t_injection(inputs[i], m);
            double f = fidelity(r.output, expected);
            t_min = std::min(t_min, f);
            branch_dump += fmt::format("t_injection input={} outcome={} probability={:.12f} fidelity={:.15f}\n", i,
                                       m, r.record.probability, f);
        }
    }

    double pair_min = 1.0;
    std::string pair_records;
    const QubitRegister zero = QubitRegister::basis(1, 0);
    for (PairBranch b : all_pair_branches()) {
        PairResult r = pi8_pair_to_zero(b);
        double f = fidelity(r.output, zero);
        pair_min = std::min(pair_min, f);
        pair_records += fmt::format("branch outcome={} consumed_wire={} probability={:.12f} fidelity={}\n",
                                    b.outcome, b.consumed_wire, r.records.front().probability, format_fixed(f, 12));
    }
    branch_dump += pair_records;

    out << fmt::format("t_injection min_fidelity={}; pi8_pair_to_zero min_fidelity={}\n", format_fixed(t_min, 12),
                       format_fixed(pair_min, 12));
    out << fmt::format("pi8_pair_to_zero resource_count={}\n", pi8_pair_resource_count());
    if (o.branches) out << pair_records;

    bool ok = t_min >= kFidelityThreshold && pair_min >= kFidelityThreshold;

    if (o.shots > 0) {
        std::mt19937_64 shot_rng(o.seed);
        int t_ones = 0;
        int pair_ones = 0;
        for (int k = 0; k < o.shots; ++k) {
            QubitRegister psi = random_qubit(shot_rng);
            t_ones += t_injection(psi, shot_rng).record.outcome;
            pair_ones += pi8_pair_to_zero(shot_rng).branch.outcome;
        }
        const double n = o.shots;
        const double five_sigma = 5.0 * std::sqrt(n * 0.25);
        for (auto [name, ones] : {std::pair{"t_injection", t_ones}, std::pair{"pi8_pair_to_zero", pair_ones}}) {
            bool within = std::abs(ones - n / 2.0) <= five_sigma;
            out << fmt::format("{} shots={} ones={} frequency={:.6f} within_5sigma={}\n", name, o.shots, ones,
                               ones / n, within ? "yes" : "no");
            ok = ok && within;
        }
    }

    if (!ok) {
        err << "verification failed; branch records:\n" << branch_dump;
        return kVerificationFailure;
    }
    return kSuccess;
}

// ---------------------------------------------------------------------------

struct PrepareOptions {
    std::string mode = "pi8";
    double sigma2 = 0.01;
    int rounds = 4;
    std::string outcomes;
    std::optional<std::uint64_t> seed;
    double width = 0.0;
    double theta_tol = kDefaultThetaTol;
    std::string out;
};

int cmd_prepare(const PrepareOptions& o, std::ostream& out) {
    std::vector<int> forced = parse_bits(o.outcomes);
    std::string report;
    ModeComb comb(1.0);
    if (o.mode == "pi8") {
        SqueezingParam s(o.sigma2);
        ModeComb input = position_wavefunction(s, LogicalLabel::zero, default_s_cut(s), o.theta_tol).normalized();
        Pi8Result r = [&] {
            if (!forced.empty()) {
                if (forced.size() != 1) throw UsageError("pi8 mode takes a single outcome bit");
                return prepare_pi8_from_zero(input, forced[0]);
            }
            if (o.seed) {
                std::mt19937_64 rng(*o.seed);
                return prepare_pi8_from_zero(input, rng);
            }
            return prepare_pi8_from_zero(input, 0);
        }();
        report = fmt::format("mode=pi8 sigma2={:.10g} db={:.10g} outcome={} probability={:.10g} overlap={:.10g}\n",
                             o.sigma2, db_from_sigma2(o.sigma2), r.outcome, r.probability, r.target_overlap);
        comb = std::move(r.comb);
    } else if (o.mode == "codeword") {
        double width = o.width > 0.0 ? o.width : default_initial_width(o.rounds);
        PhaseSchedule schedule = default_schedule();
        CodewordRun run = [&] {
            if (!forced.empty()) return run_codeword_preparation(o.rounds, schedule, width, forced);
            if (o.seed) {
                std::mt19937_64 rng(*o.seed);
                return run_codeword_preparation(o.rounds, schedule, width, rng);
            }
            return best_codeword_branch(o.rounds, schedule, width);
        }();
        const CodewordFit& f = run.fit;
        report = fmt::format(
            "mode=codeword rounds={} outcomes={} probability={:.10g} fit_valid={} fit_sigma2={:.10g} "
            "fit_db={} fit_center={:.10g} label={} overlap={:.10g}\n",
            o.rounds, bits_string(run.outcomes), run.probability, f.valid ? "yes" : "no", f.sigma2,
            f.valid ? fmt::format("{:.10g}", db_from_sigma2(f.sigma2)) : std::string("nan"), f.center,
            static_cast<int>(f.label), f.overlap);
        comb = std::move(run.comb);
    } else {
        throw UsageError(fmt::format("unknown mode '{}' (expected pi8 or codeword)", o.mode));
    }
    out << report;
    write_output(o.out, comb_dump(comb), out);
    return kSuccess;
}

// ---------------------------------------------------------------------------

// Splices config-file entries in right after the subcommand token so that
// explicit flags, which come later, win.
std::vector<std::string> apply_config(const std::vector<std::string>& args, CLI::App& app) {
    std::optional<std::string> path;
    for (std::size_t i = 0; i < args.size(); ++i) {
        if (args[i] == "--config" && i + 1 < args.size()) path = args[i + 1];
        if (args[i].rfind("--config=", 0) == 0) path = args[i].substr(9);
    }
    if (!path) return args;
    std::size_t sub_pos = args.size();
    CLI::App* sub = nullptr;
    for (std::size_t i = 0; i < args.size() && !sub; ++i) {
        for (CLI::App* s : app.get_subcommands({})) {
            if (s->check_name(args[i])) {
                sub = s;
                sub_pos = i;
                break;
            }
        }
    }
    if (!sub) return args;
    std::vector<std::string> injected;
    for (const auto& [key, value] : read_config(*path)) {
        if (key == "config" || sub->get_option_no_throw("--" + key) == nullptr) {
            throw UsageError(fmt::format("config key '{}' is not an option of '{}'", key, sub->get_name()));
        }
        injected.push_back("--" + key + "=" + value);
    }
    std::vector<std::string> merged(args.begin(), args.begin() + static_cast<std::ptrdiff_t>(sub_pos) + 1);
    merged.insert(merged.end(), injected.begin(), injected.end());
    merged.insert(merged.end(), args.begin() + static_cast<std::ptrdiff_t>(sub_pos) + 1, args.end());
    return merged;
}

}  // namespace

std::vector<double> parse_grid(const std::string& text) {
    std::string t = trim(text);
    std::vector<double> grid;
    if (t.empty()) return grid;
    if (t.find(':') != std::string::npos) {
        std::vector<double> parts;
        std::stringstream ss(t);
        std::string item;
        while (std::getline(ss, item, ':')) parts.push_back(parse_double(trim(item)));
        if (parts.size() != 3 || !(parts[2] > 0.0)) {
            throw std::invalid_argument("range grid must be start:stop:step with step > 0");
        }
        const double span = (parts[1] - parts[0]) / parts[2];
        if (span < -1e-9) return grid;
        const long n = static_cast<long>(std::floor(span + 1e-9));
        for (long k = 0; k <= n; ++k) grid.push_back(parts[0] + static_cast<double>(k) * parts[2]);
        return grid;
    }
    std::stringstream ss(t);
    std::string item;
    while (std::getline(ss, item, ',')) grid.push_back(parse_double(trim(item)));
    return grid;
}

std::string format_fixed(double value, int digits) {
    std::string s = fmt::format("{:.{}f}", value, digits);
    auto dot = s.find('.');
    if (dot == std::string::npos) return s + ".0";
    auto last = s.find_last_not_of('0');
    if (last == dot) last = dot + 1;
    return s.substr(0, last + 1);
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"GKP magic-state toolkit: negativity sweeps, ideal lattices, injection checks, preparation"};
    app.name("gkp");
    app.require_subcommand(1);
    app.option_defaults()->multi_option_policy(CLI::MultiOptionPolicy::TakeLast);

    std::string config_path;
    auto add_config = [&](CLI::App* sub) {
        sub->add_option("--config", config_path, "flat key=value file; explicit flags override it");
    };

    SweepOptions sweep;
    CLI::App* sweep_cmd = app.add_subcommand("negativity-sweep", "Wigner negativity of |0> and |H> per dB");
    sweep_cmd->add_option("--grid", sweep.grid, "dB values, '4,6,8' or 'start:stop:step'")->capture_default_str();
    sweep_cmd->add_option("--cell", sweep.cell, "quadrature cell edge")->capture_default_str();
    sweep_cmd->add_option("--points", sweep.points, "Gauss-Legendre order per axis")->capture_default_str();
    sweep_cmd->add_option("--tail-tol", sweep.tail_tol, "envelope mass allowed outside the box")
        ->capture_default_str();
    sweep_cmd->add_option("--theta-tol", sweep.theta_tol, "theta series truncation")->capture_default_str();
    sweep_cmd->add_option("--out", sweep.out, "CSV path (stdout if omitted)");
    sweep_cmd->add_flag("--log-negativity", sweep.log_negativity, "append ln N columns");
    add_config(sweep_cmd);

    IdealOptions ideal;
    CLI::App* ideal_cmd = app.add_subcommand("ideal", "unit-cell negativity of ideal lattice states");
    ideal_cmd->add_option("states", ideal.states, "state names (zero one plus minus h pi8), optionally 'a b / c d'");
    ideal_cmd->add_option("--out", ideal.out, "lattice dump path");
    add_config(ideal_cmd);

    InjectOptions inject;
    CLI::App* inject_cmd = app.add_subcommand("inject", "verify the T-injection and pi/8-pair circuits");
    inject_cmd->add_option("--seed", inject.seed, "seed for random inputs and sampled shots")->capture_default_str();
    inject_cmd->add_option("--inputs", inject.inputs, "random inputs checked per outcome")->capture_default_str();
    inject_cmd->add_option("--shots", inject.shots, "sampled runs per circuit (0 = none)")->capture_default_str();
    inject_cmd->add_flag("--branches", inject.branches, "print the pair-circuit branch records");
    add_config(inject_cmd);

    PrepareOptions prepare;
    std::uint64_t prepare_seed = 0;
    CLI::App* prepare_cmd = app.add_subcommand("prepare", "simulate qubit-assisted GKP state preparation");
    prepare_cmd->add_option("--mode", prepare.mode, "pi8 or codeword")->capture_default_str();
    prepare_cmd->add_option("--sigma2", prepare.sigma2, "input squeezing (pi8 mode)")->capture_default_str();
    prepare_cmd->add_option("--rounds", prepare.rounds, "rounds (codeword mode)")->capture_default_str();
    prepare_cmd->add_option("--outcomes", prepare.outcomes, "forced outcome bits, e.g. 0000");
    CLI::Option* seed_opt = prepare_cmd->add_option("--seed", prepare_seed, "sample outcomes with this seed");
    prepare_cmd->add_option("--width", prepare.width, "initial packet width (codeword mode)");
    prepare_cmd->add_option("--theta-tol", prepare.theta_tol, "theta series truncation")->capture_default_str();
    prepare_cmd->add_option("--out", prepare.out, "comb dump path (stdout if omitted)");
    add_config(prepare_cmd);

    try {
        std::vector<std::string> argv = apply_config(args, app);
        std::vector<std::string> reversed(argv.rbegin(), argv.rend());
        app.parse(reversed);
        if (seed_opt->count() > 0) prepare.seed = prepare_seed;

        if (sweep_cmd->parsed()) return cmd_sweep(sweep, out);
        if (ideal_cmd->parsed()) return cmd_ideal(ideal, out);
        if (inject_cmd->parsed()) return cmd_inject(inject, out, err);
        if (prepare_cmd->parsed()) return cmd_prepare(prepare, out);
        return kUsageError;
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? kSuccess : kUsageError;
    } catch (const IoError& e) {
        err << "error: " << e.what() << '\n';
        return kIoError;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << '\n';
        return kUsageError;
    } catch (const std::domain_error& e) {
        err << "error: " << e.what() << '\n';
        return kVerificationFailure;
    }
}

}  // namespace gkp::cli
