#include "weightlab.h"

#include <cstring>
#include <sstream>
#include <string>

#include "serialize.hpp"

using namespace wl;

struct wl_context {
    GlobalContext ctx;
};

namespace {

thread_local std::string g_last_error;

char* dup_string(const std::string& s) {
    char* out = new char[s.size() + 1];
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

wl_status fail(wl_status st, const std::string& msg) {
    g_last_error = msg;
    return st;
}

template <typename Fn>
wl_status guarded(Fn&& fn) {
    try {
        return fn();
    } catch (const cap_exceeded& e) {
        return fail(WL_ERR_CAP, e.what());
    } catch (const invalid_argument& e) {
        return fail(WL_ERR_INVALID, e.what());
    } catch (const std::exception& e) {
        return fail(WL_ERR_INTERNAL, e.what());
    }
}

GroupKind parse_group(const GlobalContext& ctx, const std::string& g) {
    if (g == "gl" || g == "gu") {
        if ((g == "gu") != (ctx.eta == Eta::minus))
            throw invalid_argument("group name conflicts with the context sign");
        return GroupKind::gl;
    }
    if (g == "sl" || g == "su") {
        if ((g == "su") != (ctx.eta == Eta::minus))
            throw invalid_argument("group name conflicts with the context sign");
        return GroupKind::sl;
    }
    throw invalid_argument("group must be one of gl, sl, gu, su");
}

FiniteMatrixGroup build_matrix_group(const GlobalContext& ctx, unsigned n, GroupKind kind,
                                     i64 cap) {
    if (ctx.eta == Eta::plus)
        return kind == GroupKind::gl ? gl_group(static_cast<int>(n), ctx.q, cap)
                                     : sl_group(static_cast<int>(n), ctx.q, cap);
    return kind == GroupKind::gl ? gu_group(static_cast<int>(n), ctx.q, cap)
                                 : su_group(static_cast<int>(n), ctx.q, cap);
}

BasicShape shape_from_json(const json& j) {
    BasicShape s;
    std::string kind = j.value("kind", "R");
    if (kind == "R") s.kind = ShapeKind::R;
    else if (kind == "S") s.kind = ShapeKind::S;
    else if (kind == "E+") s.kind = ShapeKind::Eplus;
    else if (kind == "E-") s.kind = ShapeKind::Eminus;
    else throw invalid_argument("unknown shape kind: " + kind);
    s.m = j.value("m", 1);
    s.alpha = j.value("alpha", 0u);
    s.gamma = j.value("gamma", 0u);
    if (j.contains("c"))
        for (const auto& ci : j.at("c")) s.c.push_back(ci.get<unsigned>());
    return s;
}

}  // namespace

extern "C" {

wl_context* wl_context_new(uint64_t q, int eta, uint64_t ell) {
    try {
        if (eta != 1 && eta != -1) throw invalid_argument("eta must be +1 or -1");
        return new wl_context{GlobalContext(static_cast<i64>(q),
                                            eta == 1 ? Eta::plus : Eta::minus,
                                            static_cast<i64>(ell))};
    } catch (const std::exception& e) {
        g_last_error = e.what();
        return nullptr;
    }
}

void wl_context_free(wl_context* ctx) { delete ctx; }

void wl_string_free(char* s) { delete[] s; }

const char* wl_last_error_message(void) { return g_last_error.c_str(); }

const char* wl_version(void) { return "weightlab 1.0.0"; }

wl_status wl_count(wl_context* ctx, unsigned n, const char* group, int with_oracle,
                   uint64_t closure_cap, char** json_out) {
    if (!ctx || !group || !json_out) return fail(WL_ERR_INVALID, "null argument");
    return guarded([&]() -> wl_status {
        GroupKind kind = parse_group(ctx->ctx, group);
        if (n < 1) throw invalid_argument("n must be positive");
        CountResult r = count_labels(ctx->ctx, n, kind);
        std::optional<i64> oracle;
        if (with_oracle) {
            i64 cap = closure_cap ? static_cast<i64>(closure_cap) : kDefaultClosureCap;
            FiniteMatrixGroup G = build_matrix_group(ctx->ctx, n, kind, cap);
            oracle = ell_regular_class_count(G, ctx->ctx.ell);
        }
        json rec = count_record(ctx->ctx, n, kind, r, oracle);
        rec["match"] = oracle ? json(r.ibr == *oracle && r.alp == *oracle) : json(nullptr);
        *json_out = dup_string(rec.dump());
        if (oracle && (*oracle != r.ibr || *oracle != r.alp))
            return fail(WL_ERR_VERIFY, "label counts disagree with the class-count oracle");
        return WL_OK;
    });
}

wl_status wl_labels(wl_context* ctx, unsigned n, const char* format, char** out) {
    if (!ctx || !out) return fail(WL_ERR_INVALID, "null argument");
    return guarded([&]() -> wl_status {
        std::string fmt = format ? format : "jsonl";
        if (fmt != "jsonl" && fmt != "tsv") throw invalid_argument("format must be jsonl or tsv");
        if (n < 1) throw invalid_argument("n must be positive");
        auto labels = enumerate_iIBr(ctx->ctx, n);
        auto orbits = zeta_orbits(ctx->ctx, labels);
        std::ostringstream os;
        if (fmt == "tsv")
            os << "s\tmu\tkappa_ell_prime\tkappa_ell\tdeg_K\tdefect\tzeta_orbit\n";
        for (size_t oid = 0; oid < orbits.size(); ++oid)
            for (const auto& x : orbits[oid]) {
                json rec = label_record(ctx->ctx, x, static_cast<int>(oid));
                if (fmt == "jsonl") {
                    os << rec.dump() << "\n";
                } else {
                    os << tsv_escape(rec["s"].dump()) << '\t' << tsv_escape(rec["mu"].dump())
                       << '\t' << rec["kappa_ell_prime"] << '\t' << rec["kappa_ell"] << '\t'
                       << rec["deg_K"].dump() << '\t' << rec["defect"] << '\t'
                       << rec["zeta_orbit"] << "\n";
                }
            }
        *out = dup_string(os.str());
        return WL_OK;
    });
}

wl_status wl_radical(wl_context* ctx, const char* shape_json, char** json_out) {
    if (!ctx || !shape_json || !json_out) return fail(WL_ERR_INVALID, "null argument");
    return guarded([&]() -> wl_status {
        json j = json::parse(shape_json, nullptr, false);
        if (j.is_discarded()) throw invalid_argument("shape_json is not valid JSON");
        RadicalShape shape;
        shape.n0 = j.value("n0", 0);
        if (j.contains("components"))
            for (const auto& cj : j.at("components")) shape.components.push_back(shape_from_json(cj));
        for (const auto& s : shape.components) validate_shape(ctx->ctx, s, /*strict=*/false);
        shape.canonicalize();
        *json_out = dup_string(radical_record(ctx->ctx, shape).dump());
        return WL_OK;
    });
}

wl_status wl_verify_section3(const char* options_json, char** json_out) {
    if (!json_out) return fail(WL_ERR_INVALID, "null argument");
    return guarded([&]() -> wl_status {
        GridSpec grid = default_grid();
        VerifyOptions opts;
        bool emit_matrices = false;
        if (options_json && *options_json) {
            json j = json::parse(options_json, nullptr, false);
            if (j.is_discarded()) throw invalid_argument("options_json is not valid JSON");
            grid.m_max = j.value("m_max", grid.m_max);
            grid.alpha_max = j.value("alpha_max", grid.alpha_max);
            grid.gamma_max = j.value("gamma_max", grid.gamma_max);
            opts.corrupt_vandermonde = j.value("inject_sign_flip", false);
            emit_matrices = j.value("emit_matrices", false);
            if (j.contains("ell_q")) {
                grid.ell_q.clear();
                for (const auto& pair : j.at("ell_q"))
                    grid.ell_q.emplace_back(pair.at(0).get<i64>(), pair.at(1).get<i64>());
            }
        }
        SectionReport report = verify_section3(grid, opts);
        std::ostringstream os;
        for (const auto& c : report.claims) os << claim_record(c).dump() << "\n";
        if (emit_matrices) {
            for (auto [ell, q] : grid.ell_q)
                for (Eta eta : {Eta::plus, Eta::minus}) {
                    GlobalContext gctx(q, eta, ell);
                    ShapeKind kind = gctx.ell2_unitary() ? ShapeKind::S : ShapeKind::R;
                    SymplecticTypeGens gens = build_generators(gctx, 1, 0, 1, kind, false);
                    json rec = generators_record(gens);
                    rec["ell"] = ell;
                    rec["q"] = q;
                    rec["eta"] = eta_int(eta);
                    os << rec.dump() << "\n";
                }
        }
        json summary;
        summary["summary"] = true;
        summary["claims"] = report.claims.size();
        summary["failures"] = report.fail_count();
        os << summary.dump() << "\n";
        *json_out = dup_string(os.str());
        if (!report.all_pass()) return fail(WL_ERR_VERIFY, "section-3 claims failed");
        return WL_OK;
    });
}

wl_status wl_bruteforce_classes(wl_context* ctx, unsigned n, const char* group,
                                uint64_t closure_cap, char** json_out) {
    if (!ctx || !group || !json_out) return fail(WL_ERR_INVALID, "null argument");
    return guarded([&]() -> wl_status {
        GroupKind kind = parse_group(ctx->ctx, group);
        i64 cap = closure_cap ? static_cast<i64>(closure_cap) : kDefaultClosureCap;
        FiniteMatrixGroup G = build_matrix_group(ctx->ctx, n, kind, cap);
        *json_out = dup_string(class_table_record(ctx->ctx, n, group, G, ctx->ctx.ell).dump());
        return WL_OK;
    });
}

wl_status wl_bruteforce_radical(wl_context* ctx, unsigned n, const char* group,
                                uint64_t closure_cap, char** json_out) {
    if (!ctx || !group || !json_out) return fail(WL_ERR_INVALID, "null argument");
    return guarded([&]() -> wl_status {
        GroupKind kind = parse_group(ctx->ctx, group);
        i64 cap = closure_cap ? static_cast<i64>(closure_cap) : kDefaultClosureCap;
        FiniteMatrixGroup G = build_matrix_group(ctx->ctx, n, kind, cap);
        auto rads = radical_subgroups(G, ctx->ctx.ell);
        json classes = json::array();
        for (const auto& R : rads) {
            FiniteMatrixGroup N = normalizer(G, R);
            FiniteMatrixGroup C = centralizer(G, R);
            FiniteMatrixGroup Z = centralizer(R, R);
            json rec;
            rec["order"] = R.order();
            rec["center"] = Z.order();
            rec["normalizer"] = N.order();
            rec["centralizer"] = C.order();
            rec["abelian"] = (Z.order() == R.order());
            classes.push_back(rec);
        }
        json out;
        out["group"] = group;
        out["n"] = n;
        out["q"] = ctx->ctx.q;
        out["ell"] = ctx->ctx.ell;
        out["order"] = G.order();
        out["radical_classes"] = classes;
        *json_out = dup_string(out.dump());
        return WL_OK;
    });
}

}  // extern "C"
