// Copyright 2026 The ctqw Authors
// SPDX-License-Identifier: Apache-2.0

#include "ctqw/config.hpp"

#include <cmath>
#include <fstream>
#include <initializer_list>
#include <numbers>
#include <sstream>

#include "ctqw/csv.hpp"
#include "ctqw/parse.hpp"

namespace ctqw {

using nlohmann::json;

namespace {

[[noreturn]] void fail(const std::string& field, const std::string& msg) {
    throw ConfigError(field + ": " + msg);
}

void reject_unknown(const json& obj, const std::string& where, std::initializer_list<const char*> allowed) {
    for (const auto& [key, _] : obj.items()) {
        bool ok = false;
        for (const char* a : allowed) ok = ok || key == a;
        if (!ok) fail(where.empty() ? key : where + "." + key, "unknown field");
    }
}

const json& require(const json& obj, const char* key, const std::string& where) {
    const auto it = obj.find(key);
    if (it == obj.end()) fail(where.empty() ? key : where + "." + key, "missing required field");
    return *it;
}

double real_value(const json& v, const std::string& field) {
    if (v.is_number()) return v.get<double>();
    if (v.is_string()) {
        try {
            return parse_real(v.get<std::string>());
        } catch (const std::invalid_argument& e) {
            fail(field, e.what());
        }
    }
    fail(field, "expected a number or an expression string");
}

std::size_t count_value(const json& v, const std::string& field) {
    if (v.is_number_unsigned()) return v.get<std::size_t>();
    if (v.is_number_integer()) {
        if (v.get<long long>() < 0) fail(field, "must be non-negative");
        return static_cast<std::size_t>(v.get<long long>());
    }
    fail(field, "expected a non-negative integer");
}

std::size_t site_count(const json& v, const std::string& field) {
    const std::size_t n = count_value(v, field);
    if (n < 2 || !is_power_of_two(n)) fail(field, "n_sites must be a power of two >= 2 (got " + std::to_string(n) + ")");
    return n;
}

double time_step(const json& v, const std::string& field) {
    const double dt = real_value(v, field);
    if (!std::isfinite(dt) || dt <= 0.0) fail(field, "dt must be finite and > 0");
    return dt;
}

double mass_value(const json& v, const std::string& field) {
    const double m = real_value(v, field);
    if (!std::isfinite(m)) fail(field, "mass must be finite");
    return m;
}

cplx complex_value(const json& v, const std::string& field) {
    if (v.is_array()) {
        if (v.size() != 2) fail(field, "expected [re, im]");
        return {real_value(v[0], field + "[0]"), real_value(v[1], field + "[1]")};
    }
    return {real_value(v, field), 0.0};
}

InitialCondition parse_initial(const json& v, const std::string& where, std::size_t max_sites) {
    if (!v.is_object()) fail(where, "expected an object");
    reject_unknown(v, where, {"spin", "position"});
    InitialCondition ic;
    if (const auto it = v.find("spin"); it != v.end()) {
        if (!it->is_array() || it->size() != 2) fail(where + ".spin", "expected two amplitudes [c_R, c_L]");
        ic.spin.r = complex_value((*it)[0], where + ".spin[0]");
        ic.spin.l = complex_value((*it)[1], where + ".spin[1]");
        const double n2 = std::norm(ic.spin.r) + std::norm(ic.spin.l);
        if (!(n2 > 0.0) || !std::isfinite(n2)) fail(where + ".spin", "spin vector must be nonzero");
    }
    if (const auto it = v.find("position"); it != v.end()) {
        const std::string pw = where + ".position";
        if (!it->is_object() || it->size() != 1) fail(pw, "expected {\"site\": x} or {\"gaussian\": {...}}");
        if (const auto s = it->find("site"); s != it->end()) {
            const std::size_t x = count_value(*s, pw + ".site");
            if (x >= max_sites) {
                fail(pw + ".site", "site " + std::to_string(x) + " outside [0, " + std::to_string(max_sites) + ")");
            }
            ic.position = SitePosition{x};
        } else if (const auto g = it->find("gaussian"); g != it->end()) {
            const std::string gw = pw + ".gaussian";
            if (!g->is_object()) fail(gw, "expected an object");
            reject_unknown(*g, gw, {"center", "sigma"});
            GaussianPosition gp;
            gp.center = real_value(require(*g, "center", gw), gw + ".center");
            gp.sigma = real_value(require(*g, "sigma", gw), gw + ".sigma");
            if (!(gp.sigma > 0.0) || !std::isfinite(gp.sigma)) fail(gw + ".sigma", "sigma must be > 0");
            ic.position = gp;
        } else {
            fail(pw, "expected {\"site\": x} or {\"gaussian\": {...}}");
        }
    }
    return ic;
}

std::optional<std::size_t> optional_count(const json& obj, const char* key, const std::string& field) {
    const auto it = obj.find(key);
    if (it == obj.end() || it->is_null()) return std::nullopt;
    return count_value(*it, field);
}

std::string path_value(const json& v, const std::string& field) {
    if (!v.is_string() || v.get<std::string>().empty()) fail(field, "expected a non-empty path string");
    return v.get<std::string>();
}

template <class T, class F>
std::vector<T> list_of(const json& doc, const char* key, F&& each) {
    const json& v = require(doc, key, "");
    std::vector<T> out;
    if (!v.is_array()) {
        out.push_back(each(v, std::string(key)));
        return out;
    }
    if (v.empty()) fail(key, "list must not be empty");
    for (std::size_t i = 0; i < v.size(); ++i) out.push_back(each(v[i], std::string(key) + "[" + std::to_string(i) + "]"));
    return out;
}

void check_mode(const json& doc, const char* expected) {
    const auto it = doc.find("mode");
    if (it != doc.end() && (!it->is_string() || it->get<std::string>() != expected)) {
        fail("mode", std::string("expected \"") + expected + "\"");
    }
}

}  // namespace

RunConfig parse_run_config(const json& doc) {
    if (!doc.is_object()) fail("<root>", "expected a JSON object");
    check_mode(doc, "simulate");
    reject_unknown(doc, "", {"mode", "n_sites", "dt", "mass", "steps", "initial", "outputs"});
    RunConfig cfg;
    cfg.params.n_sites = site_count(require(doc, "n_sites", ""), "n_sites");
    cfg.params.dt = doc.contains("dt") ? time_step(doc["dt"], "dt") : 1.0;
    cfg.params.mass = mass_value(require(doc, "mass", ""), "mass");
    cfg.params.steps = doc.contains("steps") && !doc["steps"].is_null() ? count_value(doc["steps"], "steps")
                                                                        : cfg.params.n_sites;
    if (doc.contains("initial")) cfg.initial = parse_initial(doc["initial"], "initial", cfg.params.n_sites);
    if (doc.contains("outputs")) {
        const json& o = doc["outputs"];
        if (!o.is_object()) fail("outputs", "expected an object");
        reject_unknown(o, "outputs", {"series_path", "spacetime_path", "transient_skip"});
        if (o.contains("series_path")) cfg.outputs.series_path = path_value(o["series_path"], "outputs.series_path");
        if (o.contains("spacetime_path") && !o["spacetime_path"].is_null()) {
            cfg.outputs.spacetime_path = path_value(o["spacetime_path"], "outputs.spacetime_path");
        }
        cfg.outputs.transient_skip = optional_count(o, "transient_skip", "outputs.transient_skip");
    }
    return cfg;
}

SweepConfig parse_sweep_config(const json& doc) {
    if (!doc.is_object()) fail("<root>", "expected a JSON object");
    check_mode(doc, "sweep");
    reject_unknown(doc, "", {"mode", "n_sites", "dt", "mass", "steps", "initial", "transient_skip", "outputs"});
    SweepConfig cfg;
    cfg.n_sites = list_of<std::size_t>(doc, "n_sites", site_count);
    cfg.mass = list_of<double>(doc, "mass", mass_value);
    cfg.dt = doc.contains("dt") ? list_of<double>(doc, "dt", time_step) : std::vector<double>{1.0};
    cfg.steps = optional_count(doc, "steps", "steps");
    std::size_t min_sites = cfg.n_sites.front();
    for (auto n : cfg.n_sites) min_sites = std::min(min_sites, n);
    if (doc.contains("initial")) cfg.initial = parse_initial(doc["initial"], "initial", min_sites);
    cfg.transient_skip = optional_count(doc, "transient_skip", "transient_skip");
    if (doc.contains("outputs")) {
        const json& o = doc["outputs"];
        if (!o.is_object()) fail("outputs", "expected an object");
        reject_unknown(o, "outputs", {"sweep_path", "series_dir"});
        if (o.contains("sweep_path")) cfg.sweep_path = path_value(o["sweep_path"], "outputs.sweep_path");
        if (o.contains("series_dir") && !o["series_dir"].is_null()) {
            cfg.series_dir = path_value(o["series_dir"], "outputs.series_dir");
        }
    }
    if (cfg.run_count() > kMaxSweepRuns) {
        fail("<root>", "sweep has " + std::to_string(cfg.run_count()) + " runs, limit is " + std::to_string(kMaxSweepRuns));
    }
    return cfg;
}

Config parse_config(const json& doc) {
    if (!doc.is_object()) fail("<root>", "expected a JSON object");
    const auto it = doc.find("mode");
    if (it == doc.end()) fail("mode", "missing required field (\"simulate\" or \"sweep\")");
    if (!it->is_string()) fail("mode", "expected a string");
    const auto mode = it->get<std::string>();
    if (mode == "simulate") return parse_run_config(doc);
    if (mode == "sweep") return parse_sweep_config(doc);
    fail("mode", "unknown mode '" + mode + "'");
}

Config load_config(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot read config '" + path.string() + "'");
    json doc;
    try {
        doc = json::parse(in, nullptr, true, /*ignore_comments=*/true);
    } catch (const json::parse_error& e) {
        throw ConfigError("<root>: invalid JSON: " + std::string(e.what()));
    }
    return parse_config(doc);
}

SweepConfig default_sweep_config() {
    SweepConfig cfg;
    cfg.n_sites = {32, 64, 128};
    cfg.mass = {std::numbers::pi / 4.0, std::numbers::pi / 8.0};
    cfg.dt = {1.0};
    return cfg;
}

json to_json(const InitialCondition& ic) {
    json j;
    j["spin"] = json::array({json::array({ic.spin.r.real(), ic.spin.r.imag()}),
                             json::array({ic.spin.l.real(), ic.spin.l.imag()})});
    if (const auto* s = std::get_if<SitePosition>(&ic.position)) {
        j["position"] = {{"site", s->site}};
    } else {
        const auto& g = std::get<GaussianPosition>(ic.position);
        j["position"] = {{"gaussian", {{"center", g.center}, {"sigma", g.sigma}}}};
    }
    return j;
}

}  // namespace ctqw
