// Command-line front end. Talks to the library exclusively through the C
// API in orecodes.h; all structured output is JSON on stdout.

#include <CLI11.hpp>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <sstream>
#include <string>
#include <vector>

#include "orecodes.h"

using nlohmann::json;

namespace {

struct CtxOptions {
    std::string kind;
    int64_t p = 0;
    int e = 1;
    int s = 0;
    std::string twist;
    std::string a;
    std::string ctx_file;
};

void add_ctx_options(CLI::App* cmd, CtxOptions& opt) {
    cmd->add_option("--kind", opt.kind, "context kind: frobenius | differential");
    cmd->add_option("--p", opt.p, "characteristic");
    cmd->add_option("--e", opt.e, "frobenius base degree (q = p^e)")->capture_default_str();
    cmd->add_option("--s", opt.s, "frobenius extension degree [K:F]");
    cmd->add_option("--twist", opt.twist, "frobenius twist element (comma coefficients)");
    cmd->add_option("--a", opt.a, "differential derivation scale, syntax num/den");
    cmd->add_option("--ctx", opt.ctx_file, "context descriptor JSON file (overrides the flags)");
}

[[noreturn]] void die(int code, const std::string& msg) {
    std::cerr << "error: " << msg << std::endl;
    std::exit(code == ORC_OK ? 5 : code);
}

void check(int rc) {
    if (rc != ORC_OK) die(rc, orc_last_error());
}

std::string take(char* s) {
    std::string out = s ? s : "";
    orc_string_free(s);
    return out;
}

// Shell element syntax -> JSON encoding: "num/den" rational functions with
// ascending coefficient lists, plain comma lists for finite field elements.
json elem_syntax_to_json(const CtxOptions& opt, const std::string& text) {
    auto ints = [](const std::string& part) {
        json arr = json::array();
        std::istringstream is(part);
        std::string tok;
        while (std::getline(is, tok, ',')) arr.push_back(std::stoll(tok));
        return arr;
    };
    if (opt.kind == "differential" || text.find('/') != std::string::npos) {
        std::string num = text, den = "1";
        if (auto slash = text.find('/'); slash != std::string::npos) {
            num = text.substr(0, slash);
            den = text.substr(slash + 1);
        }
        return json{{"num", ints(num)}, {"den", ints(den)}};
    }
    json arr = ints(text);
    return arr;
}

orc_ctx* make_context(const CtxOptions& opt) {
    orc_ctx* ctx = nullptr;
    if (!opt.ctx_file.empty()) {
        std::ifstream in(opt.ctx_file);
        if (!in) die(ORC_EINVAL, "cannot open context file " + opt.ctx_file);
        std::stringstream ss;
        ss << in.rdbuf();
        check(orc_ctx_from_json(ss.str().c_str(), &ctx));
        return ctx;
    }
    if (opt.kind == "frobenius") {
        if (opt.p <= 0 || opt.s <= 0) die(ORC_EINVAL, "frobenius context needs --p and --s");
        std::string twist_json;
        if (!opt.twist.empty()) twist_json = elem_syntax_to_json(opt, opt.twist).dump();
        check(orc_ctx_frobenius(opt.p, opt.e, opt.s, opt.twist.empty() ? nullptr : twist_json.c_str(), &ctx));
        return ctx;
    }
    if (opt.kind == "differential") {
        if (opt.p <= 0 || opt.a.empty()) die(ORC_EINVAL, "differential context needs --p and --a");
        std::string a_json = elem_syntax_to_json(opt, opt.a).dump();
        check(orc_ctx_differential(opt.p, a_json.c_str(), &ctx));
        return ctx;
    }
    die(ORC_EINVAL, "unknown or missing --kind (expected frobenius or differential)");
}

json parse_points(const CtxOptions& opt, const std::string& text) {
    json pts = json::array();
    std::istringstream is(text);
    std::string tok;
    while (std::getline(is, tok, ';')) {
        if (!tok.empty()) pts.push_back(elem_syntax_to_json(opt, tok));
    }
    if (pts.empty()) die(ORC_EINVAL, "empty point list");
    return pts;
}

json load_subspaces(const std::string& file) {
    std::ifstream in(file);
    if (!in) die(ORC_EINVAL, "cannot open subspace file " + file);
    json j = json::parse(in, nullptr, false);
    if (j.is_discarded() || !j.is_array()) die(ORC_EINVAL, "subspace file must hold a JSON array");
    return j;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact Ore polynomial arithmetic and sum-rank codes"};
    app.require_subcommand(1);

    CtxOptions opt;
    std::string points_text, subspaces_file, check_what, num_text, den_text;
    int64_t k = 0;
    bool corrupt = false;
    uint64_t seed = 0x5eed0'c0de;

    CLI::App* cmd_ctx = app.add_subcommand("ctx", "print a context descriptor");
    add_ctx_options(cmd_ctx, opt);

    CLI::App* cmd_code = app.add_subcommand("code", "build an evaluation or residue code");
    add_ctx_options(cmd_code, opt);
    std::string family = "lrs";
    cmd_code->add_option("--family", family, "lrs | lg");
    cmd_code->add_option("--k", k, "code dimension")->required();
    cmd_code->add_option("--points", points_text, "evaluation points, ';'-separated")->required();
    cmd_code->add_option("--subspaces", subspaces_file, "JSON file with one subspace per point")->required();
    cmd_code->add_option("--check", check_what, "additional checks: msrd");

    CLI::App* cmd_dual = app.add_subcommand("dualcheck", "verify the duality of the two families");
    add_ctx_options(cmd_dual, opt);
    cmd_dual->add_option("--k", k, "evaluation code dimension")->required();
    cmd_dual->add_option("--points", points_text, "evaluation points, ';'-separated")->required();
    cmd_dual->add_option("--subspaces", subspaces_file, "JSON file with one subspace per point")->required();
    cmd_dual->add_flag("--corrupt", corrupt, "plant a corrupted generator (detector test)");

    CLI::App* cmd_res = app.add_subcommand("residue-demo", "trace-of-residue report for num/den");
    add_ctx_options(cmd_res, opt);
    cmd_res->add_option("--num", num_text, "numerator, JSON coefficient array")->required();
    cmd_res->add_option("--den", den_text, "denominator in Z, JSON coefficient array over F")->required();

    CLI::App* cmd_self = app.add_subcommand("selftest", "run the full verification suites");
    cmd_self->add_option("--seed", seed, "random seed for the property runs");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    if (cmd_ctx->parsed()) {
        orc_ctx* ctx = make_context(opt);
        char* out = nullptr;
        check(orc_ctx_describe(ctx, &out));
        std::cout << take(out) << std::endl;
        orc_ctx_free(ctx);
        return 0;
    }

    if (cmd_code->parsed()) {
        orc_ctx* ctx = make_context(opt);
        json params{{"family", family},
                    {"k", k},
                    {"points", parse_points(opt, points_text)},
                    {"subspaces", load_subspaces(subspaces_file)}};
        if (check_what == "msrd") params["check_msrd"] = true;
        char* out = nullptr;
        check(orc_code_build(ctx, params.dump().c_str(), &out));
        std::cout << take(out) << std::endl;
        orc_ctx_free(ctx);
        return 0;
    }

    if (cmd_dual->parsed()) {
        orc_ctx* ctx = make_context(opt);
        json params{{"k", k},
                    {"points", parse_points(opt, points_text)},
                    {"subspaces", load_subspaces(subspaces_file)},
                    {"corrupt", corrupt}};
        char* out = nullptr;
        int ok = 0;
        check(orc_dualcheck(ctx, params.dump().c_str(), &out, &ok));
        std::cout << take(out) << std::endl;
        orc_ctx_free(ctx);
        return ok ? 0 : 1;
    }

    if (cmd_res->parsed()) {
        orc_ctx* ctx = make_context(opt);
        char* out = nullptr;
        check(orc_residue_demo(ctx, num_text.c_str(), den_text.c_str(), &out));
        std::cout << take(out) << std::endl;
        orc_ctx_free(ctx);
        return 0;
    }

    if (cmd_self->parsed()) {
        char* out = nullptr;
        int ok = 0;
        check(orc_selftest(seed, &out, &ok));
        std::string report = take(out);
        json j = json::parse(report);
        for (const json& c : j["criteria"])
            std::cerr << "criterion " << c["id"] << " [" << (c["pass"].get<bool>() ? "PASS" : "FAIL")
                      << "] " << c["name"].get<std::string>() << " (" << c["detail"].get<std::string>()
                      << ")" << std::endl;
        std::cout << report << std::endl;
        return ok ? 0 : 1;
    }

    return 2;
}
