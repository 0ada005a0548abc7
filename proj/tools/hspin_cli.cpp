// hspin command line: line-delimited JSON in, line-delimited JSON out.
// Exit codes: 0 pass, 1 identity violation, 2 input error.
#include <chrono>
#include <cmath>
#include <cstdio>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "hspin/json_io.hpp"
#include "hspin/lambda.hpp"
#include "hspin/quasiplucker.hpp"
#include "hspin/verify.hpp"

using namespace hspin;

namespace {

struct Options {
    double tol = -1;  // < 0: library or per-suite default
    std::uint64_t seed = 1;
    int trials = 1000;
    bool json = true;
    std::string method = "pdet";
    std::string suite = "all";
    std::string from, to;
};

// tolerance forwarded to library calls (0 selects the library default)
double lib_tol(const Options& o) { return o.tol >= 0 ? o.tol : 0.0; }

std::vector<nlohmann::json> read_stdin_lines() {
    std::vector<nlohmann::json> docs;
    std::string line;
    while (std::getline(std::cin, line)) {
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        docs.push_back(nlohmann::json::parse(line));
    }
    return docs;
}

void emit(const std::string& s) { std::fwrite(s.data(), 1, s.size(), stdout); std::fputc('\n', stdout); }

std::string fmt_bool(bool b) { return b ? "true" : "false"; }

const nlohmann::json& field(const nlohmann::json& j, const char* key) {
    if (!j.is_object() || !j.contains(key))
        throw ArgumentError(std::string("input line: missing key \"") + key + "\"");
    return j.at(key);
}

int run_validate(const Options& o) {
    int code = 0;
    for (const nlohmann::json& doc : read_stdin_lines()) {
        if (doc.is_object() && doc.contains("xi")) {
            auto [xi, eta] = spinor_pair_from_json(doc);
            SpinorCheck c = check_spinor(xi, eta, lib_tol(o));
            if (o.json)
                emit("{\"command\":\"validate\",\"kind\":\"spinor\",\"input\":" +
                     json_spinor(xi, eta) + ",\"ok\":" + fmt_bool(c.ok) +
                     ",\"residual\":" + fmt_double(c.residual) + ",\"error\":\"" +
                     json_escape(c.error) + "\"}");
            else
                emit(std::string("spinor ") + (c.ok ? "ok" : "fail") +
                     " residual=" + fmt_double(c.residual) +
                     (c.ok ? "" : " (" + c.error + ")"));
            if (!c.ok) code = 1;
        } else if (doc.is_object() && doc.contains("a")) {
            CliffordMatrix m = clifford_raw_from_json(doc);
            CliffordCheck c = check_clifford(m, lib_tol(o));
            if (o.json)
                emit("{\"command\":\"validate\",\"kind\":\"clifford\",\"input\":" +
                     json_clifford(m) + ",\"ok\":" + fmt_bool(c.ok) +
                     ",\"residual\":" + fmt_double(c.residual) + ",\"error\":\"" +
                     json_escape(c.error) + "\"}");
            else
                emit(std::string("clifford ") + (c.ok ? "ok" : "fail") +
                     " residual=" + fmt_double(c.residual) +
                     (c.ok ? "" : " (" + c.error + ")"));
            if (!c.ok) code = 1;
        } else {
            throw ArgumentError("input line: expected a spinor (key \"xi\") or a "
                                "Clifford matrix (key \"a\")");
        }
    }
    return code;
}

int run_lambda(const Options& o) {
    int code = 0;
    for (const nlohmann::json& doc : read_stdin_lines()) {
        auto [x1, e1] = spinor_pair_from_json(field(doc, "k1"));
        auto [x2, e2] = spinor_pair_from_json(field(doc, "k2"));
        Spinor k1 = make_spinor(x1, e1, lib_tol(o));
        Spinor k2 = make_spinor(x2, e2, lib_tol(o));
        std::string head = "{\"command\":\"lambda\",\"method\":\"" + o.method +
                           "\",\"k1\":" + json_spinor(k1) + ",\"k2\":" + json_spinor(k2);
        Quaternion lp = lambda_pdet(k1, k2);
        if (o.method == "pdet") {
            if (o.json)
                emit(head + ",\"pdet\":" + json_quaternion(lp) + "}");
            else
                emit("pdet=" + json_quaternion(lp));
            continue;
        }
        double rtol = resolve_tolerance(lib_tol(o));
        if (lp.norm() <= rtol * (1 + k1.norm() * k2.norm()))
            throw DomainError("degenerate pair: the spinors share a centre");
        Quaternion lg = lambda_geometric(k1, k2, lib_tol(o));
        if (o.method == "geometric") {
            if (o.json)
                emit(head + ",\"geometric\":" + json_quaternion(lg) + "}");
            else
                emit("geometric=" + json_quaternion(lg));
            continue;
        }
        double residual = std::min((lp - lg).norm(), (lp + lg).norm());
        if (residual > rtol * (1 + lp.norm())) code = std::max(code, 1);
        if (o.json)
            emit(head + ",\"pdet\":" + json_quaternion(lp) +
                 ",\"geometric\":" + json_quaternion(lg) +
                 ",\"residual\":" + fmt_double(residual) + "}");
        else
            emit("pdet=" + json_quaternion(lp) + " geometric=" + json_quaternion(lg) +
                 " residual=" + fmt_double(residual));
    }
    return code;
}

int run_horosphere(const Options& o) {
    for (const nlohmann::json& doc : read_stdin_lines()) {
        auto [xi, eta] = spinor_pair_from_json(doc);
        Spinor k = make_spinor(xi, eta, lib_tol(o));
        DecoratedHorosphere h = decorated_horosphere_from_spinor(k, lib_tol(o));
        if (o.json)
            emit("{\"command\":\"horosphere\",\"input\":" + json_spinor(k) +
                 ",\"center\":" + json_extended(h.center) +
                 ",\"size\":" + fmt_double(h.size) +
                 ",\"dir_i\":" + json_paravector(h.dir_i) +
                 ",\"dir_j\":" + json_paravector(h.dir_j) + "}");
        else
            emit("center=" + json_extended(h.center) + " size=" + fmt_double(h.size) +
                 " dir_i=" + json_paravector(h.dir_i) +
                 " dir_j=" + json_paravector(h.dir_j));
    }
    return 0;
}

MinkowskiPoint uhs_to_hyperboloid(const ExtendedParavector& v) {
    if (v.inf) return {1, 0, 0, 0, 1};
    double n2 = v.v.norm2();
    return {n2 + 1, 2 * v.v.a, 2 * v.v.b, 2 * v.v.c, n2 - 1};
}

int run_convert(const Options& o) {
    for (const nlohmann::json& doc : read_stdin_lines()) {
        std::string in_echo;
        MinkowskiPoint p;  // hyperboloid-model light cone representative
        if (o.from == "hyperboloid") {
            p = point_from_json(doc);
            boundary_to_uhs(p, lib_tol(o));  // validates null and future
            in_echo = json_point(p);
        } else if (o.from == "disc") {
            std::array<double, 4> q = disc_point_from_json(doc);
            disc_boundary_to_uhs(q, lib_tol(o));  // validates |q| = 1
            p = {1, q[0], q[1], q[2], q[3]};
            in_echo = json_disc_point(q);
        } else {
            ExtendedParavector v = extended_from_json(doc);
            p = uhs_to_hyperboloid(v);
            in_echo = json_extended(v);
        }
        std::string out;
        if (o.to == "hyperboloid")
            out = json_point(p);
        else if (o.to == "disc")
            out = json_disc_point(boundary_to_disc(p, lib_tol(o)));
        else
            out = json_extended(boundary_to_uhs(p, lib_tol(o)));
        if (o.json)
            emit("{\"command\":\"convert\",\"from\":\"" + o.from + "\",\"to\":\"" + o.to +
                 "\",\"input\":" + in_echo + ",\"output\":" + out + "}");
        else
            emit(out);
    }
    return 0;
}

int run_act(const Options& o) {
    for (const nlohmann::json& doc : read_stdin_lines()) {
        CliffordMatrix raw = clifford_raw_from_json(field(doc, "A"));
        CliffordMatrix m = make_clifford(raw.a, raw.b, raw.c, raw.d, lib_tol(o));
        std::string kind, in_echo, result;
        if (doc.contains("spinor")) {
            auto [xi, eta] = spinor_pair_from_json(doc.at("spinor"));
            Spinor k = make_spinor(xi, eta, lib_tol(o));
            kind = "spinor";
            in_echo = json_spinor(k);
            result = json_spinor(act_spinor(m, k));
        } else if (doc.contains("point")) {
            MinkowskiPoint p = point_from_json(doc.at("point"));
            kind = "point";
            in_echo = json_point(p);
            result = json_point(act_minkowski(m, p));
        } else if (doc.contains("boundary")) {
            ExtendedParavector v = extended_from_json(doc.at("boundary"));
            kind = "boundary";
            in_echo = json_extended(v);
            result = json_extended(mobius_apply(m, v, lib_tol(o)));
        } else {
            throw ArgumentError("input line: expected one of \"spinor\", \"point\", "
                                "\"boundary\" next to \"A\"");
        }
        if (o.json)
            emit("{\"command\":\"act\",\"kind\":\"" + kind + "\",\"A\":" + json_clifford(m) +
                 ",\"input\":" + in_echo + ",\"result\":" + result + "}");
        else
            emit(result);
    }
    return 0;
}

int run_verify(const Options& o) {
    std::vector<std::string> suites;
    if (o.suite == "all")
        suites = suite_names();
    else
        suites.push_back(o.suite);
    int code = 0;
    for (const std::string& name : suites) {
        SuiteResult r = run_suite(name, o.trials, o.seed, o.tol);
        if (!r.pass) code = 1;
        if (o.json) {
            char buf[64];
            std::snprintf(buf, sizeof buf, "%llu",
                          static_cast<unsigned long long>(r.worst_seed));
            std::string worst = buf;
            std::snprintf(buf, sizeof buf, "%llu",
                          static_cast<unsigned long long>(o.seed));
            emit("{\"command\":\"verify\",\"suite\":\"" + r.suite +
                 "\",\"trials\":" + std::to_string(r.trials) + ",\"seed\":" + buf +
                 ",\"tolerance\":" + fmt_double(r.tolerance) +
                 ",\"max_residual\":" + fmt_double(r.max_residual) +
                 ",\"worst_seed\":" + worst + ",\"pass\":" + fmt_bool(r.pass) + "}");
        } else {
            emit("suite=" + r.suite + " trials=" + std::to_string(r.trials) +
                 " max_residual=" + fmt_double(r.max_residual) +
                 " tol=" + fmt_double(r.tolerance) + (r.pass ? " pass" : " FAIL"));
        }
    }
    return code;
}

}  // namespace

int main(int argc, char** argv) {
    Options o;
    CLI::App app{"quaternionic spinors, horospheres and lambda lengths in H^4"};
    app.require_subcommand(1);
    app.add_option("--tol", o.tol, "comparison tolerance (default: library/suite default)");
    app.add_option("--seed", o.seed, "base RNG seed")->capture_default_str();
    app.add_option("--trials", o.trials, "randomized trials per suite")->capture_default_str();
    app.add_flag("--json,!--no-json", o.json, "line-delimited JSON output (default on)");

    CLI::App* c_validate = app.add_subcommand(
        "validate", "check spinor / Clifford matrix conditions from stdin");
    CLI::App* c_lambda =
        app.add_subcommand("lambda", "lambda length of spinor pairs from stdin");
    c_lambda->add_option("--method", o.method, "pdet, geometric, or both")
        ->capture_default_str()
        ->check(CLI::IsMember({"pdet", "geometric", "both"}));
    CLI::App* c_horosphere = app.add_subcommand(
        "horosphere", "decorated horosphere of each stdin spinor");
    CLI::App* c_convert =
        app.add_subcommand("convert", "convert boundary points between models");
    std::vector<std::string> models{"hyperboloid", "disc", "uhs"};
    c_convert->add_option("--from", o.from, "source model")
        ->required()
        ->check(CLI::IsMember(models));
    c_convert->add_option("--to", o.to, "target model")
        ->required()
        ->check(CLI::IsMember(models));
    CLI::App* c_act = app.add_subcommand(
        "act", "apply a Clifford matrix to spinors, points or boundary points");
    CLI::App* c_verify =
        app.add_subcommand("verify", "randomized identity suites");
    std::vector<std::string> suites = suite_names();
    suites.push_back("all");
    c_verify->add_option("--suite", o.suite, "suite name or all")
        ->capture_default_str()
        ->check(CLI::IsMember(suites));
    for (CLI::App* sub : {c_validate, c_lambda, c_horosphere, c_convert, c_act, c_verify})
        sub->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int c = app.exit(e);
        return c == 0 ? 0 : 2;
    }

    auto t0 = std::chrono::steady_clock::now();
    int code = 0;
    try {
        if (app.got_subcommand(c_validate)) code = run_validate(o);
        else if (app.got_subcommand(c_lambda)) code = run_lambda(o);
        else if (app.got_subcommand(c_horosphere)) code = run_horosphere(o);
        else if (app.got_subcommand(c_convert)) code = run_convert(o);
        else if (app.got_subcommand(c_act)) code = run_act(o);
        else if (app.got_subcommand(c_verify)) code = run_verify(o);
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        code = 2;
    }
    double dt = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    std::fprintf(stderr, "wall time: %.6f s\n", dt);
    return code;
}
