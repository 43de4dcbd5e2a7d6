#include "serialize.hpp"

namespace wl {

json to_json(const RootOfUnity& r) { return json::array({r.num, r.den}); }

json to_json(const Partition& p) { return json(p.parts); }

json to_json(const CoreTower& t) {
    json entries = json::array();
    for (const auto& [key, lam] : t.entries)
        entries.push_back(json::array({key.first, key.second, to_json(lam)}));
    return entries;
}

json to_json(const SemisimpleLabel& s) {
    json out = json::array();
    for (const auto& [rep, m] : s.mult)
        out.push_back({{"root", to_json(rep)}, {"mult", m}});
    return out;
}

json label_record(const GlobalContext& ctx, const IBrLabel& x, int orbit_id) {
    AlpLabel y = omega(ctx, x);
    KappaPair k = kappa_ibr(ctx, x);
    json mu = json::array();
    for (const auto& [rep, part] : x.mu)
        mu.push_back({{"root", to_json(rep)}, {"partition", to_json(part)}});
    json lambda = json::array();
    for (const auto& [rep, part] : y.lambda)
        lambda.push_back({{"root", to_json(rep)}, {"partition", to_json(part)}});
    json towers = json::array();
    for (const auto& [rep, tuple] : y.K) {
        json tlist = json::array();
        for (const auto& t : tuple) tlist.push_back(to_json(t));
        towers.push_back({{"root", to_json(rep)}, {"towers", tlist}});
    }
    unsigned deg = deg_K(ctx, y);
    json rec;
    rec["s"] = to_json(x.s);
    rec["mu"] = mu;
    rec["lambda"] = lambda;
    rec["K"] = towers;
    rec["kappa_ell_prime"] = k.ell_prime;
    rec["kappa_ell"] = k.ell;
    if (deg == kDegInfinity)
        rec["deg_K"] = nullptr;
    else
        rec["deg_K"] = deg;
    rec["defect"] = defect_valuation(ctx, x);
    rec["zeta_orbit"] = orbit_id;
    return rec;
}

json count_record(const GlobalContext& ctx, unsigned n, GroupKind kind, const CountResult& r,
                  std::optional<i64> oracle) {
    json rec;
    rec["group"] = (kind == GroupKind::gl) ? (ctx.eta == Eta::plus ? "gl" : "gu")
                                           : (ctx.eta == Eta::plus ? "sl" : "su");
    rec["n"] = n;
    rec["q"] = ctx.q;
    rec["eta"] = eta_int(ctx.eta);
    rec["ell"] = ctx.ell;
    rec["ibr"] = r.ibr;
    rec["alp"] = r.alp;
    if (oracle)
        rec["oracle"] = *oracle;
    else
        rec["oracle"] = nullptr;
    return rec;
}

json shape_to_json(const BasicShape& s) {
    const char* kind = s.kind == ShapeKind::R ? "R"
                       : s.kind == ShapeKind::S ? "S"
                       : s.kind == ShapeKind::Eplus ? "E+"
                                                    : "E-";
    return {{"kind", kind}, {"m", s.m}, {"alpha", s.alpha}, {"gamma", s.gamma}, {"c", s.c}};
}

json radical_record(const GlobalContext& ctx, const RadicalShape& shape) {
    json comps = json::array();
    for (const auto& s : shape.components) comps.push_back(shape_to_json(s));
    json rec;
    rec["q"] = ctx.q;
    rec["eta"] = eta_int(ctx.eta);
    rec["ell"] = ctx.ell;
    rec["n0"] = shape.n0;
    rec["components"] = comps;
    rec["degree"] = shape_degree(ctx, shape);
    bool special = is_special(ctx, shape);
    rec["is_special"] = special;
    DetInfo d = det_info(ctx, shape);
    rec["order_det_R"] = d.order_det_R;
    rec["order_det_RC"] = d.order_det_RC;
    rec["order_det_N"] = d.order_det_N;
    if (special)
        rec["splitting"] = splitting_count(ctx, shape);
    else
        rec["splitting"] = nullptr;
    rec["exceptional_case"] = exceptional_case_name(exceptional_weight_case(ctx, shape));
    if (ctx.ell2_unitary()) {
        json subs = json::array();
        for (const auto& s : shape.components) subs.push_back(shape_to_json(substitute_D(ctx, s)));
        rec["d_substitute"] = subs;
    }
    bool weight_style = shape.n0 == 0 && !shape.components.empty();
    for (const auto& s : shape.components)
        if (s.m % ctx.ell == 0) weight_style = false;
    if (weight_style) {
        RadicalShape sub = shape;
        if (ctx.ell2_unitary())
            for (auto& s : sub.components) s = substitute_D(ctx, s);
        sub.canonicalize();
        rec["xi_case"] = xi_case_name(xi_case(ctx, sub));
    } else {
        rec["xi_case"] = nullptr;
    }
    return rec;
}

json claim_record(const ClaimResult& c) {
    json rec;
    rec["claim"] = c.id;
    rec["params"] = c.params;
    rec["pass"] = c.pass;
    if (!c.pass) rec["witness"] = c.witness;
    return rec;
}

json class_table_record(const GlobalContext& ctx, unsigned n, const std::string& group,
                        const FiniteMatrixGroup& G, i64 ell) {
    auto table = conjugacy_classes(G);
    json rec;
    rec["group"] = group;
    rec["n"] = n;
    rec["q"] = ctx.q;
    rec["ell"] = ell;
    rec["order"] = G.order();
    rec["classes"] = table.classes.size();
    i64 regular = 0;
    json sizes = json::array();
    for (const auto& c : table.classes) {
        sizes.push_back({{"size", c.size}, {"element_order", c.element_order}});
        if (c.element_order % ell != 0) ++regular;
    }
    rec["ell_regular"] = regular;
    rec["class_data"] = sizes;
    return rec;
}

json generators_record(const SymplecticTypeGens& G) {
    const Field& F = *G.F;
    json field;
    field["p"] = F.p();
    field["k"] = F.k();
    field["modulus"] = F.modulus();
    auto mat_json = [&](const SpMat& m) {
        json rows = json::array();
        for (int i = 0; i < m.n; ++i) {
            json row = json::array();
            for (auto [j, v] : m.rows[static_cast<size_t>(i)])
                row.push_back(json::array({j, json(F.coeffs(v))}));
            rows.push_back(row);
        }
        return json{{"n", m.n}, {"rows", rows}};
    };
    json gens = json::array();
    auto add = [&](const GenRecord& g) {
        if (g.mat.n == 0) return;
        gens.push_back({{"name", g.name}, {"matrix", mat_json(g.mat)}});
    };
    add(G.z);
    for (const auto& g : G.xs) add(g);
    for (const auto& g : G.ys) add(g);
    add(G.tau);
    for (const auto& g : G.ngens) add(g);
    json rec;
    rec["field"] = field;
    rec["m"] = G.m;
    rec["alpha"] = G.alpha;
    rec["gamma"] = G.gamma;
    rec["generators"] = gens;
    return rec;
}

std::string tsv_escape(const std::string& s) {
    std::string out;
    for (char c : s) {
        if (c == '\t' || c == '\n') out += ' ';
        else out += c;
    }
    return out;
}

}  // namespace wl
