// Command-line front end for the weightlab shared library.  Exit codes:
// 0 success, 1 verification failure, 2 invalid parameters or cap exceeded.

#include <cstdio>
#include <cstdlib>
#include <string>

#include <CLI11.hpp>

#include "weightlab.h"

namespace {

int status_to_exit(wl_status st) {
    switch (st) {
        case WL_OK: return 0;
        case WL_ERR_VERIFY: return 1;
        default: return 2;
    }
}

uint64_t closure_cap_from_env() {
    const char* s = std::getenv("WEIGHTLAB_CAP");
    if (!s || !*s) return 0;  // library default
    char* end = nullptr;
    unsigned long long v = std::strtoull(s, &end, 10);
    if (end == s || *end != '\0') {
        std::fprintf(stderr, "error: WEIGHTLAB_CAP is not a number\n");
        std::exit(2);
    }
    return v;
}

struct CtxArgs {
    uint64_t n = 2;
    uint64_t q = 3;
    uint64_t ell = 2;
    std::string group = "gl";
    int eta = 0;  // 0 = derive from the group name
};

int resolved_eta(const CtxArgs& a) {
    if (a.eta != 0) return a.eta;
    return (a.group == "gu" || a.group == "su") ? -1 : 1;
}

// With an explicit --eta the group name is canonicalized to the matching sign.
std::string resolved_group(const CtxArgs& a) {
    bool special = (a.group == "sl" || a.group == "su");
    if (resolved_eta(a) == -1) return special ? "su" : "gu";
    return special ? "sl" : "gl";
}

wl_context* make_context(const CtxArgs& a) {
    wl_context* ctx = wl_context_new(a.q, resolved_eta(a), a.ell);
    if (!ctx) {
        std::fprintf(stderr, "error: %s\n", wl_last_error_message());
        std::exit(2);
    }
    return ctx;
}

int emit(wl_status st, char* out) {
    if (out) {
        std::fputs(out, stdout);
        size_t len = std::strlen(out);
        if (len > 0 && out[len - 1] != '\n') std::fputc('\n', stdout);
        wl_string_free(out);
    }
    if (st != WL_OK) std::fprintf(stderr, "error: %s\n", wl_last_error_message());
    return status_to_exit(st);
}

void add_ctx_options(CLI::App* cmd, CtxArgs& a, bool with_n = true) {
    if (with_n) cmd->add_option("--n", a.n, "matrix degree")->required();
    cmd->add_option("--q", a.q, "prime power q")->required();
    cmd->add_option("--ell", a.ell, "the prime ell (!= characteristic)")->required();
    cmd->add_option("--group", a.group, "gl, sl, gu or su")
        ->check(CLI::IsMember({"gl", "sl", "gu", "su"}));
    cmd->add_option("--eta", a.eta, "+1 or -1 (overrides the group name)")
        ->check(CLI::IsMember({-1, 1}));
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"label counts, radical subgroup classification and brute-force "
                 "cross-checks for GL_n(q) / GU_n(q)"};
    app.require_subcommand(1);

    CtxArgs count_args;
    bool count_check = false;
    auto* count_cmd = app.add_subcommand("count", "Brauer-label and weight-label counts");
    add_ctx_options(count_cmd, count_args);
    count_cmd->add_flag("--check", count_check, "compare with the brute-force class count");

    CtxArgs label_args;
    std::string label_format = "jsonl";
    auto* labels_cmd = app.add_subcommand("labels", "stream the label records of GL_n/GU_n");
    add_ctx_options(labels_cmd, label_args);
    labels_cmd->add_option("--format", label_format, "jsonl or tsv")
        ->check(CLI::IsMember({"jsonl", "tsv"}));

    CtxArgs rad_args;
    uint64_t rad_m = 1, rad_alpha = 0, rad_gamma = 0, rad_n0 = 0;
    std::vector<uint64_t> rad_c;
    std::string rad_kind = "R";
    std::string rad_shape_json;
    auto* rad_cmd = app.add_subcommand("radical", "classify one radical-subgroup shape");
    add_ctx_options(rad_cmd, rad_args, /*with_n=*/false);
    rad_cmd->add_option("--m", rad_m, "ell-prime block multiplicity m");
    rad_cmd->add_option("--alpha", rad_alpha, "alpha");
    rad_cmd->add_option("--gamma", rad_gamma, "gamma");
    rad_cmd->add_option("--c", rad_c, "wreath exponents c_1 c_2 ...");
    rad_cmd->add_option("--kind", rad_kind, "R, S, E+ or E-")
        ->check(CLI::IsMember({"R", "S", "E+", "E-"}));
    rad_cmd->add_option("--n0", rad_n0, "degree of the trivial block");
    rad_cmd->add_option("--shape-json", rad_shape_json,
                        "full shape as JSON (overrides the flag form)");

    bool v3_flip = false, v3_emit = false;
    uint64_t v3_mmax = 3, v3_amax = 1, v3_gmax = 2;
    auto* v3_cmd = app.add_subcommand("verify-section3",
                                      "check the generator/determinant claims on the grid");
    v3_cmd->add_flag("--inject-sign-flip", v3_flip,
                     "negative control: skip the Vandermonde normalization");
    v3_cmd->add_flag("--emit-matrices", v3_emit, "dump generator matrices as JSON");
    v3_cmd->add_option("--m-max", v3_mmax, "largest odd m");
    v3_cmd->add_option("--alpha-max", v3_amax, "largest alpha");
    v3_cmd->add_option("--gamma-max", v3_gmax, "largest gamma");

    CtxArgs bf_args;
    auto* bf_cmd = app.add_subcommand("bruteforce", "exact matrix-group tables");
    bf_cmd->require_subcommand(1);
    auto* bf_classes = bf_cmd->add_subcommand("classes", "conjugacy class table");
    add_ctx_options(bf_classes, bf_args);
    auto* bf_radical = bf_cmd->add_subcommand("radical", "radical ell-subgroup classes");
    add_ctx_options(bf_radical, bf_args);

    CLI11_PARSE(app, argc, argv);
    uint64_t cap = closure_cap_from_env();

    if (count_cmd->parsed()) {
        wl_context* ctx = make_context(count_args);
        char* out = nullptr;
        wl_status st = wl_count(ctx, static_cast<unsigned>(count_args.n),
                                resolved_group(count_args).c_str(), count_check ? 1 : 0, cap, &out);
        wl_context_free(ctx);
        return emit(st, out);
    }
    if (labels_cmd->parsed()) {
        wl_context* ctx = make_context(label_args);
        char* out = nullptr;
        wl_status st = wl_labels(ctx, static_cast<unsigned>(label_args.n),
                                 label_format.c_str(), &out);
        wl_context_free(ctx);
        return emit(st, out);
    }
    if (rad_cmd->parsed()) {
        wl_context* ctx = make_context(rad_args);
        std::string shape = rad_shape_json;
        if (shape.empty()) {
            shape = "{\"n0\": " + std::to_string(rad_n0) + ", \"components\": [{\"kind\": \"" +
                    rad_kind + "\", \"m\": " + std::to_string(rad_m) +
                    ", \"alpha\": " + std::to_string(rad_alpha) +
                    ", \"gamma\": " + std::to_string(rad_gamma) + ", \"c\": [";
            for (size_t i = 0; i < rad_c.size(); ++i)
                shape += (i ? "," : "") + std::to_string(rad_c[i]);
            shape += "]}]}";
        }
        char* out = nullptr;
        wl_status st = wl_radical(ctx, shape.c_str(), &out);
        wl_context_free(ctx);
        return emit(st, out);
    }
    if (v3_cmd->parsed()) {
        std::string opts = "{\"m_max\": " + std::to_string(v3_mmax) +
                           ", \"alpha_max\": " + std::to_string(v3_amax) +
                           ", \"gamma_max\": " + std::to_string(v3_gmax) +
                           ", \"inject_sign_flip\": " + (v3_flip ? "true" : "false") +
                           ", \"emit_matrices\": " + (v3_emit ? "true" : "false") + "}";
        char* out = nullptr;
        wl_status st = wl_verify_section3(opts.c_str(), &out);
        return emit(st, out);
    }
    if (bf_cmd->parsed()) {
        wl_context* ctx = make_context(bf_args);
        char* out = nullptr;
        wl_status st;
        if (bf_classes->parsed())
            st = wl_bruteforce_classes(ctx, static_cast<unsigned>(bf_args.n),
                                       resolved_group(bf_args).c_str(), cap, &out);
        else
            st = wl_bruteforce_radical(ctx, static_cast<unsigned>(bf_args.n),
                                       resolved_group(bf_args).c_str(), cap, &out);
        wl_context_free(ctx);
        return emit(st, out);
    }
    return 2;
}
