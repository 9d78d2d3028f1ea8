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

#include "chansim/cli/serialize.hpp"

#include <openssl/evp.h>

#include <cmath>
#include <sstream>

#include <fmt/core.h>

#include "chansim/combinatorics.hpp"
#include "chansim/error.hpp"

namespace chansim::io {

namespace {

[[noreturn]] void malformed(const std::string &what) { throw Error(ErrorCode::InvalidInput, what); }

const Json &field(const Json &j, const char *key) {
    if (!j.is_object() || !j.contains(key)) {
        malformed(std::string("missing field \"") + key + "\"");
    }
    return j.at(key);
}

double number(const Json &j) {
    if (!j.is_number()) {
        malformed("expected a number, got " + j.dump());
    }
    double v = j.get<double>();
    if (!std::isfinite(v)) {
        malformed("non-finite number");
    }
    return v;
}

const Json &array(const Json &j) {
    if (!j.is_array()) {
        malformed("expected an array, got " + j.dump());
    }
    return j;
}

void dump_into(const Json &j, std::string &out) {
    switch (j.type()) {
    case Json::value_t::object: {
        // nlohmann objects are std::map backed, so iteration is key-sorted.
        out += '{';
        bool first = true;
        for (const auto &[key, value] : j.items()) {
            if (!first) {
                out += ',';
            }
            first = false;
            out += Json(key).dump();
            out += ':';
            dump_into(value, out);
        }
        out += '}';
        break;
    }
    case Json::value_t::array: {
        out += '[';
        for (size_t i = 0; i < j.size(); ++i) {
            if (i > 0) {
                out += ',';
            }
            dump_into(j[i], out);
        }
        out += ']';
        break;
    }
    case Json::value_t::number_float: {
        double v = j.get<double>();
        if (!std::isfinite(v)) {
            throw Error(ErrorCode::InvalidInput, "cannot serialize a non-finite number");
        }
        if (v == 0.0) {
            v = 0.0;
        }
        out += fmt::format("{:.17g}", v);
        break;
    }
    default:
        out += j.dump(-1, ' ', false, Json::error_handler_t::strict);
    }
}

}  // namespace

std::string canonical_dump(const Json &value) {
    std::string out;
    dump_into(value, out);
    return out;
}

std::string sha256_hex(std::string_view data) {
    unsigned char digest[EVP_MAX_MD_SIZE];
    unsigned int len = 0;
    if (EVP_Digest(data.data(), data.size(), digest, &len, EVP_sha256(), nullptr) != 1) {
        throw Error(ErrorCode::NumericalBreakdown, "SHA-256 failed");
    }
    std::string hex;
    for (unsigned int i = 0; i < len; ++i) {
        hex += fmt::format("{:02x}", digest[i]);
    }
    return hex;
}

Json to_json(const Matrix &m) {
    Json rows = Json::array();
    for (size_t r = 0; r < m.rows(); ++r) {
        Json row = Json::array();
        for (size_t c = 0; c < m.cols(); ++c) {
            row.push_back(m(r, c));
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

Json to_json(const ComplexMatrix &m) {
    Json rows = Json::array();
    for (size_t r = 0; r < m.dim(); ++r) {
        Json row = Json::array();
        for (size_t c = 0; c < m.dim(); ++c) {
            row.push_back(Json::array({m(r, c).real(), m(r, c).imag()}));
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

Json to_json(const Povm &p) {
    Json outcomes = Json::array();
    for (const auto &e : p.outcomes) {
        outcomes.push_back(to_json(e));
    }
    return Json{{"outcomes", outcomes}};
}

Json to_json(const ClassicalProtocol &p) {
    return Json{{"k", p.k}, {"decoder", p.decoder}, {"states", to_json(p.states)}};
}

Json to_json(const NoiseSpec &spec) {
    if (std::holds_alternative<noise::Noiseless>(spec)) {
        return Json{{"kind", "none"}};
    }
    if (const auto *d = std::get_if<noise::Delta>(&spec)) {
        return Json{{"kind", "delta"}, {"delta", d->delta}};
    }
    if (const auto *p = std::get_if<noise::Permutohedron>(&spec)) {
        return Json{{"kind", "permutohedron"}, {"base", p->base}};
    }
    Json cols = Json::array();
    for (const auto &c : std::get<noise::PerColumn>(spec).columns) {
        cols.push_back(c.base);
    }
    return Json{{"kind", "per_column"}, {"columns", cols}};
}

Json to_json(const ClassicalMixture &m) {
    Json terms = Json::array();
    for (const auto &t : m.terms) {
        terms.push_back(Json{{"weight", t.weight}, {"protocol", to_json(t.protocol)}});
    }
    return Json{{"states", m.states}, {"noise", to_json(m.noise)}, {"terms", terms}};
}

Json to_json(const BallModel &model) {
    Json effects = Json::array();
    for (const auto &e : model.effects) {
        effects.push_back(Json{{"c", e.c}, {"v", e.v}});
    }
    Json states = Json::array();
    for (const auto &s : model.states) {
        states.push_back(s.x);
    }
    return Json{{"norm_index", model.norm_index}, {"effects", effects}, {"ball_states", states}};
}

Json to_json(const WitnessReport &rep) {
    return Json{{"value", rep.value},
                {"bound", rep.bound},
                {"relation", rep.relation == Relation::AtLeast ? ">=" : "<="},
                {"r", rep.r},
                {"d", rep.d},
                {"k", rep.k},
                {"n", rep.n},
                {"verdict", rep.pass ? "pass" : "violation"}};
}

Json to_json(const Polytope &p) {
    Json facets = Json::array();
    for (const auto &f : p.facets) {
        facets.push_back(Json{{"normal", f.normal}, {"offset", f.offset}});
    }
    return Json{{"vertices", p.vertices}, {"facets", facets}};
}

std::vector<double> vector_from_json(const Json &j) {
    std::vector<double> out;
    for (const auto &x : array(j)) {
        out.push_back(number(x));
    }
    return out;
}

Matrix matrix_from_json(const Json &j) {
    std::vector<std::vector<double>> rows;
    for (const auto &row : array(j)) {
        rows.push_back(vector_from_json(row));
    }
    if (rows.empty()) {
        malformed("empty matrix");
    }
    for (const auto &row : rows) {
        if (row.size() != rows.front().size() || row.empty()) {
            malformed("ragged matrix rows");
        }
    }
    return Matrix::from_rows(rows);
}

TransitionMatrix transition_from_json(const Json &j, double tol) { return TransitionMatrix::from(matrix_from_json(j), tol); }

ComplexMatrix complex_from_json(const Json &j) {
    std::vector<std::vector<Complex>> rows;
    for (const auto &row : array(j)) {
        std::vector<Complex> out;
        for (const auto &x : array(row)) {
            if (x.is_array()) {
                if (x.size() != 2) {
                    malformed("complex entries must be [re, im]");
                }
                out.emplace_back(number(x[0]), number(x[1]));
            } else {
                out.emplace_back(number(x), 0.0);
            }
        }
        rows.push_back(std::move(out));
    }
    if (rows.empty()) {
        malformed("empty matrix");
    }
    return ComplexMatrix::from_rows(rows);
}

Povm povm_from_json(const Json &j) {
    Povm p;
    for (const auto &e : array(field(j, "outcomes"))) {
        p.outcomes.push_back(complex_from_json(e));
    }
    if (p.outcomes.empty()) {
        malformed("POVM has no outcomes");
    }
    return p;
}

std::vector<DensityMatrix> states_from_json(const Json &j) {
    std::vector<DensityMatrix> out;
    for (const auto &s : array(j)) {
        out.push_back({complex_from_json(s)});
    }
    return out;
}

ClassicalProtocol protocol_from_json(const Json &j) {
    ClassicalProtocol p;
    const auto &k = field(j, "k");
    if (!k.is_number_integer() || k.get<long long>() < 1) {
        malformed("protocol k must be a positive integer");
    }
    p.k = k.get<size_t>();
    for (const auto &d : array(field(j, "decoder"))) {
        if (!d.is_number_integer()) {
            malformed("decoder entries must be integers");
        }
        p.decoder.push_back(d.get<int>());
    }
    p.states = matrix_from_json(field(j, "states"));
    return p;
}

NoiseSpec noise_from_json(const Json &j) {
    const auto &kind = field(j, "kind");
    if (!kind.is_string()) {
        malformed("noise kind must be a string");
    }
    auto k = kind.get<std::string>();
    if (k == "none") {
        return noise::Noiseless{};
    }
    if (k == "delta") {
        return noise::Delta{number(field(j, "delta"))};
    }
    if (k == "permutohedron") {
        return noise::Permutohedron{vector_from_json(field(j, "base"))};
    }
    if (k == "per_column") {
        noise::PerColumn per;
        for (const auto &c : array(field(j, "columns"))) {
            per.columns.push_back({vector_from_json(c)});
        }
        return per;
    }
    malformed("unknown noise kind \"" + k + "\"");
}

ClassicalMixture mixture_from_json(const Json &j) {
    ClassicalMixture m;
    const auto &states = field(j, "states");
    if (!states.is_number_integer()) {
        malformed("mixture state count must be an integer");
    }
    m.states = states.get<size_t>();
    m.noise = noise_from_json(field(j, "noise"));
    for (const auto &t : array(field(j, "terms"))) {
        m.terms.push_back({number(field(t, "weight")), protocol_from_json(field(t, "protocol"))});
    }
    return m;
}

BallModel ball_from_json(const Json &j) {
    BallModel m;
    const auto &n = field(j, "norm_index");
    if (!n.is_number_integer()) {
        malformed("norm_index must be an integer");
    }
    m.norm_index = n.get<int>();
    for (const auto &e : array(field(j, "effects"))) {
        m.effects.push_back({number(field(e, "c")), vector_from_json(field(e, "v"))});
    }
    for (const auto &s : array(field(j, "ball_states"))) {
        m.states.push_back({vector_from_json(s)});
    }
    return m;
}

Polytope polytope_from_json(const Json &j) {
    Polytope p;
    for (const auto &v : array(field(j, "vertices"))) {
        p.vertices.push_back(vector_from_json(v));
    }
    for (const auto &f : array(field(j, "facets"))) {
        p.facets.push_back({vector_from_json(field(f, "normal")), number(field(f, "offset"))});
    }
    return p;
}

NoiseSpec parse_noise_flag(const std::string &text) {
    if (text == "none") {
        return noise::Noiseless{};
    }
    if (text.rfind("delta:", 0) == 0) {
        return noise::Delta{Rational::parse(text.substr(6)).to_double()};
    }
    if (text.rfind("perm:", 0) == 0) {
        noise::Permutohedron p;
        std::stringstream ss(text.substr(5));
        std::string item;
        while (std::getline(ss, item, ',')) {
            p.base.push_back(Rational::parse(item).to_double());
        }
        if (p.base.empty()) {
            malformed("perm noise needs at least one entry");
        }
        return p;
    }
    malformed("noise must be none, delta:<value> or perm:<a,b,...>");
}

}  // namespace chansim::io
