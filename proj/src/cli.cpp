// Copyright 2026 The chansim Authors
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

#include "chansim/cli/cli.hpp"

#include <unistd.h>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>

#include <fmt/core.h>

#include "CLI11.hpp"
#include "chansim/certify.hpp"
#include "chansim/cli/serialize.hpp"
#include "chansim/combinatorics.hpp"
#include "chansim/error.hpp"
#include "chansim/random.hpp"
#include "chansim/simulate.hpp"

namespace chansim::cli {

namespace {

using io::Json;

struct Options {
    double tol = 1e-9;
    std::uint64_t seed = 0;
    std::uint64_t cap = kDefaultEnumerationCap;
    bool json_errors = false;
    std::string out_path;

    std::string in_path;
    std::string noise = "none";
    std::string delta = "0";
    int d = 0;
    int r = 0;
    int n = 0;
    int m = 0;
    std::string dir = ".";
    std::string cert_path;
};

struct Outcome {
    Json result;
    int exit = kExitOk;
};

Json read_json(const std::string &path) {
    std::string text;
    if (path == "-") {
        text.assign(std::istreambuf_iterator<char>(std::cin), {});
    } else {
        std::ifstream in(path, std::ios::binary);
        if (!in) {
            throw Error(ErrorCode::InvalidInput, "cannot read " + path);
        }
        text.assign(std::istreambuf_iterator<char>(in), {});
    }
    try {
        return Json::parse(text);
    } catch (const Json::exception &e) {
        throw Error(ErrorCode::InvalidInput, path + ": " + e.what());
    }
}

/// Temp file in the target directory, then rename.
void write_atomic(const std::string &path, const std::string &text) {
    namespace fs = std::filesystem;
    fs::path target(path);
    fs::path tmp = target;
    tmp += fmt::format(".tmp.{}", static_cast<long>(::getpid()));
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) {
            throw Error(ErrorCode::InvalidInput, "cannot write " + tmp.string());
        }
        out << text;
        out.flush();
        if (!out) {
            throw Error(ErrorCode::InvalidInput, "short write to " + tmp.string());
        }
    }
    std::error_code ec;
    fs::rename(tmp, target, ec);
    if (ec) {
        fs::remove(tmp);
        throw Error(ErrorCode::InvalidInput, "cannot rename onto " + path + ": " + ec.message());
    }
}

Json tolerances(const Options &o) {
    return Json{{"residual", kResidualTol}, {"validation", o.tol}, {"witness", kWitnessSlack}};
}

Json simulation_json(const SimulationResult &r) {
    return Json{{"target", io::to_json(r.target.matrix())}, {"mixture", io::to_json(r.mixture)}, {"residual", r.residual}};
}

int param_int(const Json &params, const char *key) {
    if (!params.contains(key) || !params.at(key).is_number_integer()) {
        throw Error(ErrorCode::InvalidInput, std::string("parameter ") + key + " missing");
    }
    return params.at(key).get<int>();
}

std::string param_str(const Json &params, const char *key) {
    if (!params.contains(key) || !params.at(key).is_string()) {
        throw Error(ErrorCode::InvalidInput, std::string("parameter ") + key + " missing");
    }
    return params.at(key).get<std::string>();
}

/// A protocol given directly, or a transition matrix read with the identity
/// decoder.
ClassicalProtocol target_protocol(const Json &data, double tol) {
    if (data.contains("protocol")) {
        return io::protocol_from_json(data.at("protocol"));
    }
    auto a = io::transition_from_json(data.at("matrix"), tol);
    ClassicalProtocol p;
    p.k = a.k();
    for (size_t i = 0; i < a.k(); ++i) {
        p.decoder.push_back(static_cast<int>(i));
    }
    p.states = a.matrix();
    return p;
}

std::vector<double> replacer_spectrum(const Json &data, int n) {
    if (data.is_null()) {
        return std::vector<double>(static_cast<size_t>(n), 1.0 / n);
    }
    if (data.contains("spectrum")) {
        return io::vector_from_json(data.at("spectrum"));
    }
    DensityMatrix rho{io::complex_from_json(data.at("state"))};
    require_valid(rho);
    return hermitian_eigenvalues(rho.matrix).values;
}

Asymmetry asymmetry_from_result(const Json &result) {
    return Asymmetry{result.at("asymmetry").get<double>(), io::vector_from_json(result.at("center"))};
}

/// Computes the result for a command from its canonical input document.
Outcome execute(const std::string &command, const Json &input, const Options &o) {
    const Json &data = input.at("data");
    const Json &params = input.at("params");
    SimulationOptions sim_opts{o.cap, true};

    if (command == "simulate quantum") {
        auto povm = io::povm_from_json(data.at("povm"));
        auto states = io::states_from_json(data.at("states"));
        require_valid(povm, o.tol);
        for (const auto &s : states) {
            require_valid(s, o.tol);
        }
        auto spec = io::noise_from_json(params.at("noise"));
        auto r = std::holds_alternative<noise::Noiseless>(spec) ? simulate_quantum_noiseless(povm, states, sim_opts)
                                                                 : simulate_quantum_noisy(povm, states, spec, sim_opts);
        return {simulation_json(r), kExitOk};
    }
    if (command == "simulate ball") {
        auto model = io::ball_from_json(data);
        validate_ball_model(model, o.tol);
        double delta = Rational::parse(param_str(params, "delta")).to_double();
        return {simulation_json(simulate_ball(model, delta, sim_opts)), kExitOk};
    }
    if (command == "simulate reduce") {
        auto a = io::transition_from_json(data.at("matrix"), o.tol);
        std::optional<std::vector<double>> p;
        if (data.contains("p")) {
            p = io::vector_from_json(data.at("p"));
        }
        return {simulation_json(reduce_rows(a, p)), kExitOk};
    }
    if (command == "simulate noisy-to-noiseless") {
        auto target = target_protocol(data, o.tol);
        auto spec = io::noise_from_json(params.at("noise"));
        auto r = simulate_noisy_by_noiseless(spec, target, param_int(params, "d"));
        if (const auto *w = std::get_if<BinomialWitness>(&r)) {
            return {Json{{"witness", Json{{"r", w->r}, {"prefix", w->prefix}, {"bound", w->bound}, {"column", w->column}}}},
                    kExitNegative};
        }
        return {simulation_json(std::get<SimulationResult>(r)), kExitOk};
    }
    if (command == "certify storability") {
        std::vector<TransitionMatrix> ms;
        if (data.contains("matrices")) {
            for (const auto &m : data.at("matrices")) {
                ms.push_back(io::transition_from_json(m, o.tol));
            }
        } else {
            ms.push_back(io::transition_from_json(data.at("matrix"), o.tol));
        }
        return {Json{{"storability", storability(ms)}, {"k", ms.empty() ? 0 : ms.front().k()}}, kExitOk};
    }
    if (command == "certify subset" || command == "certify pairwise") {
        auto a = io::transition_from_json(data.at("matrix"), o.tol);
        auto rep = command == "certify subset" ? subset_witness(a, param_int(params, "r"), param_int(params, "d"))
                                               : pairwise_witness(a, param_int(params, "d"));
        return {io::to_json(rep), rep.pass ? kExitOk : kExitNegative};
    }
    if (command == "certify asymmetry") {
        auto a = minkowski_asymmetry_with_center(io::polytope_from_json(data));
        return {Json{{"asymmetry", a.value}, {"infstor", a.value + 1.0}, {"center", a.center}}, kExitOk};
    }
    if (command == "certify signalling") {
        int n = param_int(params, "n");
        Rational delta = Rational::parse(param_str(params, "delta"));
        return {Json{{"n", n}, {"delta", delta.to_string()}, {"dimension", noisy_signalling_dimension(n, delta)}},
                kExitOk};
    }
    if (command == "certify replacer") {
        int n = param_int(params, "n");
        int m = param_int(params, "m");
        Rational delta = Rational::parse(param_str(params, "delta"));
        auto mu = replacer_spectrum(data, n);
        auto b = replacer_bounds(m, delta, mu, n);
        Json exact = b.exact ? Json(*b.exact) : Json(nullptr);
        return {Json{{"lower", b.lower}, {"upper", b.upper}, {"exact", exact}}, kExitOk};
    }
    if (command == "certify holevo") {
        auto states = io::states_from_json(data.at("states"));
        for (const auto &s : states) {
            require_valid(s, o.tol);
        }
        auto q = io::vector_from_json(data.at("q"));
        Json result{{"chi", holevo_chi(states, q)}};
        if (data.contains("povm")) {
            auto povm = io::povm_from_json(data.at("povm"));
            require_valid(povm, o.tol);
            result["info"] = mutual_information(born_matrix(povm, states), q);
        }
        return {result, kExitOk};
    }
    throw Error(ErrorCode::InvalidInput, "unknown command " + command);
}

struct Check {
    std::vector<std::string> problems;

    void require(bool ok, const std::string &what) {
        if (!ok) {
            problems.push_back(what);
        }
    }
};

/// Recomposition and noise-membership checks of a stored simulation result.
void check_simulation(Check &c, const Json &result, const TransitionMatrix &target, const NoiseSpec &declared,
                      size_t max_states, double residual_tol) {
    auto stored = io::matrix_from_json(result.at("target"));
    c.require(stored.rows() == target.k() && stored.cols() == target.l() &&
                  stored.max_abs_diff(target.matrix()) <= 1e-12,
              "stored target differs from the input channel");
    auto mixture = io::mixture_from_json(result.at("mixture"));
    c.require(io::canonical_dump(io::to_json(mixture.noise)) == io::canonical_dump(io::to_json(declared)),
              "mixture noise differs from the requested noise");
    c.require(mixture.states <= max_states, "mixture declares too many states");
    double total = 0.0;
    for (size_t t = 0; t < mixture.terms.size(); ++t) {
        const auto &term = mixture.terms[t];
        total += term.weight;
        c.require(term.weight >= 0.0, fmt::format("term {} has negative weight", t));
        c.require(term.protocol.n() <= mixture.states, fmt::format("term {} uses too many states", t));
        try {
            validate_protocol(term.protocol);
        } catch (const Error &e) {
            c.problems.push_back(fmt::format("term {}: {}", t, e.what()));
            continue;
        }
        for (size_t j = 0; j < term.protocol.states.cols(); ++j) {
            c.require(satisfies_noise(term.protocol.states.column(j), mixture.noise, j, kValidationTol),
                      fmt::format("term {} column {} leaves the noise set", t, j));
        }
    }
    c.require(std::abs(total - 1.0) <= 1e-9, fmt::format("weights sum to {:.17g}", total));
    if (!c.problems.empty()) {
        return;
    }
    try {
        double residual = mixture_matrix(mixture).matrix().max_abs_diff(target.matrix());
        c.require(residual <= residual_tol, fmt::format("recomposition residual {:.3g}", residual));
    } catch (const Error &e) {
        c.problems.push_back(e.what());
    }
}

void verify_certificate(Check &c, const Json &cert, const Options &o) {
    c.require(cert.value("version", "") == kCertificateVersion, "unknown certificate version");
    const auto &input = cert.at("input");
    c.require(io::sha256_hex(io::canonical_dump(input)) == cert.value("input_digest", ""), "input digest mismatch");
    const std::string command = cert.at("command").get<std::string>();
    const Json &data = input.at("data");
    const Json &params = input.at("params");
    const Json &result = cert.at("result");
    const double residual_tol = cert.at("tolerances").value("residual", kResidualTol);
    const double tol = cert.at("tolerances").value("validation", o.tol);

    if (command == "simulate quantum") {
        auto povm = io::povm_from_json(data.at("povm"));
        auto states = io::states_from_json(data.at("states"));
        check_simulation(c, result, born_matrix(povm, states), io::noise_from_json(params.at("noise")), povm.dim(),
                         residual_tol);
    } else if (command == "simulate ball") {
        auto model = io::ball_from_json(data);
        double delta = Rational::parse(param_str(params, "delta")).to_double();
        check_simulation(c, result, ball_born_matrix(model, delta), noise::Delta{delta},
                         static_cast<size_t>(model.norm_index), residual_tol);
    } else if (command == "simulate reduce") {
        auto a = io::transition_from_json(data.at("matrix"), tol);
        check_simulation(c, result, a, noise::Noiseless{}, a.k() - 1, residual_tol);
    } else if (command == "simulate noisy-to-noiseless") {
        auto target = target_protocol(data, tol);
        auto spec = io::noise_from_json(params.at("noise"));
        const int d = param_int(params, "d");
        if (result.contains("witness")) {
            auto again = simulate_noisy_by_noiseless(spec, target, d);
            const auto *w = std::get_if<BinomialWitness>(&again);
            c.require(w != nullptr && w->r == result.at("witness").at("r").get<int>(), "witness does not reproduce");
        } else {
            c.require(spec.index() != std::variant_npos, "bad noise");
            check_simulation(c, result, protocol_matrix(target), noise::Noiseless{}, static_cast<size_t>(d),
                             residual_tol);
        }
    } else if (command == "certify asymmetry") {
        auto p = io::polytope_from_json(data);
        auto a = asymmetry_from_result(result);
        c.require(asymmetry_attained(p, a), "stored centre does not attain the stored asymmetry");
        c.require(std::abs(result.at("infstor").get<double>() - a.value - 1.0) <= 1e-12, "infstor is not asymmetry + 1");
    } else {
        // Closed-form certificates: recompute and compare.
        auto again = execute(command, input, o);
        if (again.result.contains("value") && result.contains("value")) {
            c.require(std::abs(again.result.at("value").get<double>() - result.at("value").get<double>()) <= 1e-9,
                      "stored value does not reproduce");
            c.require(again.result.at("verdict") == result.at("verdict"), "stored verdict does not reproduce");
            c.require(again.result.at("bound") == result.at("bound"), "stored bound does not reproduce");
        } else {
            c.require(io::canonical_dump(again.result) == io::canonical_dump(result), "stored result does not reproduce");
        }
    }
}

void emit(const std::string &text, const Options &o, std::ostream &out) {
    if (o.out_path.empty()) {
        out << text << '\n';
    } else {
        write_atomic(o.out_path, text + "\n");
    }
}

void report_error(const std::string &code, const std::string &message, const Json &extra, const Options &o,
                  std::ostream &err) {
    if (o.json_errors) {
        Json j{{"error", Json{{"code", code}, {"message", message}}}};
        if (!extra.is_null()) {
            j["error"]["details"] = extra;
        }
        err << io::canonical_dump(j) << '\n';
    } else {
        err << "error: " << code << ": " << message << '\n';
    }
}

Json fixture_octahedron() {
    return Json{{"matrix", io::to_json(Matrix::from_rows({{0.5, 0, 0.5, 0, 0.5, 0},
                                                          {0.5, 0, 0, 0.5, 0, 0.5},
                                                          {0, 0.5, 0.5, 0, 0, 0.5},
                                                          {0, 0.5, 0, 0.5, 0.5, 0}}))}};
}

/// Projective measurement on the half-depolarized basis states of a qutrit.
Json fixture_depolarizing() {
    const size_t n = 3;
    const double delta = 0.5;
    Povm p;
    Json states = Json::array();
    for (size_t i = 0; i < n; ++i) {
        std::vector<double> e(n, 0.0);
        e[i] = 1.0;
        p.outcomes.push_back(ComplexMatrix::diagonal(e));
        std::vector<double> rho(n, delta / n);
        rho[i] += 1.0 - delta;
        states.push_back(io::to_json(ComplexMatrix::diagonal(rho)));
    }
    return Json{{"povm", io::to_json(p)}, {"states", states}};
}

Json fixture_random_povm(std::uint64_t seed) {
    Rng rng(seed);
    auto p = sample::povm(2, 3, rng);
    Json states = Json::array();
    for (int j = 0; j < 2; ++j) {
        states.push_back(io::to_json(sample::noisy_density(2, 0.5, rng).matrix));
    }
    return Json{{"povm", io::to_json(p)}, {"states", states}};
}

int emit_fixtures(const Options &o, std::ostream &out) {
    namespace fs = std::filesystem;
    fs::create_directories(o.dir);
    std::vector<std::pair<std::string, Json>> files{
        {"octahedron.json", fixture_octahedron()},
        {"octahedron_polytope.json", io::to_json(Polytope::octahedron())},
        {"depolarizing.json", fixture_depolarizing()},
        {"random_povm.json", fixture_random_povm(o.seed)},
    };
    Json written = Json::array();
    for (const auto &[name, doc] : files) {
        auto path = (fs::path(o.dir) / name).string();
        write_atomic(path, io::canonical_dump(doc) + "\n");
        written.push_back(path);
    }
    out << io::canonical_dump(Json{{"written", written}}) << '\n';
    return kExitOk;
}

}  // namespace

int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err) {
    Options o;
    CLI::App app{"Simulate quantum and generalized channels by classical ones, with checkable certificates.",
                 "chansim"};
    app.require_subcommand(1);
    app.fallthrough();
    app.add_option("--tol", o.tol, "Validation tolerance for inputs")->capture_default_str();
    app.add_option("--seed", o.seed, "Seed for generated fixtures")->capture_default_str();
    app.add_option("--cap", o.cap, "Largest k^n outcome enumeration")->capture_default_str();
    app.add_flag("--json-errors", o.json_errors, "Report errors as JSON on stderr");
    app.add_option("--out", o.out_path, "Write the certificate here instead of stdout");

    auto *sim = app.add_subcommand("simulate", "Build a classical simulation certificate");
    sim->require_subcommand(1);
    sim->fallthrough();
    auto *sim_quantum = sim->add_subcommand("quantum", "POVM and states -> classical mixture");
    auto *sim_ball = sim->add_subcommand("ball", "Ball-model channel -> delta-noisy classical mixture");
    auto *sim_reduce = sim->add_subcommand("reduce", "Row reduction to k - 1 state protocols");
    auto *sim_n2n = sim->add_subcommand("noisy-to-noiseless", "Noisy n-state channel -> noiseless d-state mixture");
    for (auto *s : {sim_quantum, sim_ball, sim_reduce, sim_n2n}) {
        s->add_option("--in", o.in_path, "Input JSON ('-' for stdin)")->required();
    }
    sim_quantum->add_option("--noise", o.noise, "none | delta:<p/q> | perm:<a,b,...>")->capture_default_str();
    sim_ball->add_option("--delta", o.delta, "Noise level")->capture_default_str();
    sim_n2n->add_option("--noise", o.noise, "delta:<p/q> | perm:<a,b,...>")->required();
    sim_n2n->add_option("--d", o.d, "Number of noiseless states")->required();

    auto *cert = app.add_subcommand("certify", "Witnesses, bounds and diagnostics");
    cert->require_subcommand(1);
    cert->fallthrough();
    auto *c_stor = cert->add_subcommand("storability", "Largest sum of row maxima");
    auto *c_subset = cert->add_subcommand("subset", "Subset-sum witness");
    auto *c_pair = cert->add_subcommand("pairwise", "Pairwise witness");
    auto *c_asym = cert->add_subcommand("asymmetry", "Minkowski asymmetry of a polytope");
    auto *c_sig = cert->add_subcommand("signalling", "Signalling dimension of the delta-noisy channel");
    auto *c_rep = cert->add_subcommand("replacer", "Partial replacer channel bounds");
    auto *c_hol = cert->add_subcommand("holevo", "Holevo quantity and mutual information");
    for (auto *s : {c_stor, c_subset, c_pair, c_asym, c_hol}) {
        s->add_option("--in", o.in_path, "Input JSON ('-' for stdin)")->required();
    }
    c_subset->add_option("--r", o.r, "Subset size")->required();
    c_subset->add_option("--d", o.d, "State count")->required();
    c_pair->add_option("--d", o.d, "State count")->required();
    c_sig->add_option("--n", o.n, "Number of states")->required();
    c_sig->add_option("--delta", o.delta, "Noise level as p/q or decimal")->required();
    c_rep->add_option("--in", o.in_path, "Optional {\"spectrum\"} or {\"state\"} of the replacement state");
    c_rep->add_option("--m", o.m, "Input level")->required();
    c_rep->add_option("--n", o.n, "Output level")->required();
    c_rep->add_option("--delta", o.delta, "Noise level as p/q or decimal")->required();

    auto *ver = app.add_subcommand("verify", "Check a certificate without re-running the solver");
    ver->add_option("certificate", o.cert_path, "Certificate JSON")->required();

    auto *fix = app.add_subcommand("fixtures", "Example inputs");
    fix->require_subcommand(1);
    fix->fallthrough();
    auto *fix_emit = fix->add_subcommand("emit", "Write fixture files");
    fix_emit->add_option("--dir", o.dir, "Output directory")->capture_default_str();

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError &e) {
        if (e.get_exit_code() == 0) {
            app.exit(e, out, err);
            return kExitOk;
        }
        o.json_errors = std::find(args.begin(), args.end(), "--json-errors") != args.end();
        if (o.json_errors) {
            report_error("Usage", e.what(), nullptr, o, err);
        } else {
            app.exit(e, out, err);
        }
        return kExitError;
    }

    try {
        if (fix_emit->parsed()) {
            return emit_fixtures(o, out);
        }
        if (ver->parsed()) {
            Json cert = read_json(o.cert_path);
            Check c;
            try {
                verify_certificate(c, cert, o);
            } catch (const Json::exception &e) {
                c.problems.push_back(std::string("malformed certificate: ") + e.what());
            } catch (const Error &e) {
                c.problems.push_back(std::string(error_code_name(e.code())) + ": " + e.what());
            }
            Json report{{"verified", c.problems.empty()}, {"problems", c.problems}};
            out << io::canonical_dump(report) << '\n';
            return c.problems.empty() ? kExitOk : kExitNegative;
        }

        std::string command;
        Json params = Json::object();
        Json data = nullptr;
        auto leaf = [&](CLI::App *parent, CLI::App *child) {
            if (child->parsed()) {
                command = parent->get_name() + " " + child->get_name();
            }
        };
        for (auto *s : {sim_quantum, sim_ball, sim_reduce, sim_n2n}) {
            leaf(sim, s);
        }
        for (auto *s : {c_stor, c_subset, c_pair, c_asym, c_sig, c_rep, c_hol}) {
            leaf(cert, s);
        }
        if (!o.in_path.empty()) {
            data = read_json(o.in_path);
        }
        if (sim_quantum->parsed() || sim_n2n->parsed()) {
            params["noise"] = io::to_json(io::parse_noise_flag(o.noise));
        }
        if (sim_ball->parsed() || c_sig->parsed() || c_rep->parsed()) {
            params["delta"] = Rational::parse(o.delta).to_string();
        }
        if (sim_n2n->parsed() || c_subset->parsed() || c_pair->parsed()) {
            params["d"] = o.d;
        }
        if (c_subset->parsed()) {
            params["r"] = o.r;
        }
        if (c_sig->parsed() || c_rep->parsed()) {
            params["n"] = o.n;
        }
        if (c_rep->parsed()) {
            params["m"] = o.m;
        }
        // Round-trip through the canonical text so the stored input is exactly
        // what the digest covers.
        Json input = Json::parse(io::canonical_dump(Json{{"data", data}, {"params", params}}));
        Outcome result = execute(command, input, o);
        Json certificate{{"version", kCertificateVersion},
                         {"command", command},
                         {"input", input},
                         {"input_digest", io::sha256_hex(io::canonical_dump(input))},
                         {"result", result.result},
                         {"tolerances", tolerances(o)}};
        emit(io::canonical_dump(certificate), o, out);
        return result.exit;
    } catch (const LpInfeasibleError &e) {
        report_error(std::string(error_code_name(e.code())), e.what(),
                     Json{{"column", e.column()}, {"multipliers", e.certificate().multipliers}}, o, err);
        return kExitNegative;
    } catch (const Error &e) {
        report_error(std::string(error_code_name(e.code())), e.what(), nullptr, o, err);
    } catch (const Json::exception &e) {
        report_error("InvalidInput", e.what(), nullptr, o, err);
    } catch (const std::exception &e) {
        report_error("Internal", e.what(), nullptr, o, err);
    }
    return kExitError;
}

int run(int argc, char **argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return run(args, std::cout, std::cerr);
}

}  // namespace chansim::cli
