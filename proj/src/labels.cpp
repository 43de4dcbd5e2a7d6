#include "labels.hpp"

#include <algorithm>
#include <set>

namespace wl {

int SemisimpleLabel::degree(const GlobalContext& ctx) const {
    i64 n = 0;
    for (const auto& [rep, m] : mult) n += m * mult_order(ctx.eta_q(), rep.den);
    return static_cast<int>(n);
}

std::vector<SemisimpleLabel> enumerate_semisimple(const GlobalContext& ctx, unsigned n,
                                                  bool ell_prime) {
    if (n == 0) throw invalid_argument("enumerate_semisimple: n must be positive");
    auto orbits = enumerate_orbits(ctx, n, ell_prime);
    std::vector<SemisimpleLabel> out;
    SemisimpleLabel cur;
    auto rec = [&](auto&& self, size_t idx, i64 remaining) -> void {
        if (remaining == 0) {
            out.push_back(cur);
            return;
        }
        if (idx >= orbits.size()) return;
        const auto& orb = orbits[idx];
        self(self, idx + 1, remaining);
        for (i64 m = 1; m * orb.d <= remaining; ++m) {
            cur.mult[orb.rep] = static_cast<int>(m);
            self(self, idx + 1, remaining - m * orb.d);
        }
        cur.mult.erase(orb.rep);
    };
    rec(rec, 0, static_cast<i64>(n));
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<IBrLabel> enumerate_iIBr(const GlobalContext& ctx, unsigned n) {
    std::vector<IBrLabel> out;
    for (const auto& s : enumerate_semisimple(ctx, n, /*ell_prime=*/true)) {
        std::vector<IBrLabel> partial{IBrLabel{s, {}}};
        for (const auto& [rep, m] : s.mult) {
            std::vector<IBrLabel> next;
            for (const auto& base : partial)
                for (const auto& mu : partitions_of(m)) {
                    IBrLabel lab = base;
                    lab.mu[rep] = mu;
                    next.push_back(std::move(lab));
                }
            partial = std::move(next);
        }
        for (auto& lab : partial) out.push_back(std::move(lab));
    }
    std::sort(out.begin(), out.end());
    return out;
}

namespace {

// All e-tuples of towers with given total weight, in a deterministic order.
std::vector<std::vector<CoreTower>> tower_tuples(int weight, i64 e, i64 ell) {
    std::vector<std::vector<CoreTower>> out;
    std::vector<CoreTower> cur(static_cast<size_t>(e));
    auto rec = [&](auto&& self, i64 pos, int remaining) -> void {
        if (pos == e) {
            if (remaining == 0) out.push_back(cur);
            return;
        }
        for (int w = 0; w <= remaining; ++w) {
            if (pos == e - 1 && w != remaining) continue;
            for (const auto& f : towers_of_weight(w, ell)) {
                cur[static_cast<size_t>(pos)] = f;
                self(self, pos + 1, remaining - w);
            }
        }
    };
    rec(rec, 0, weight);
    return out;
}

i64 e_of_orbit(const GlobalContext& ctx, const RootOfUnity& rep) {
    if (ctx.ell == 2) return 1;
    i64 d = mult_order(ctx.eta_q(), rep.den);
    return mult_order(pow_mod(ctx.eta_q(), static_cast<u64>(d), ctx.ell), ctx.ell);
}

}  // namespace

std::vector<AlpLabel> enumerate_iAlp(const GlobalContext& ctx, unsigned n) {
    std::vector<AlpLabel> out;
    for (const auto& s : enumerate_semisimple(ctx, n, /*ell_prime=*/true)) {
        std::vector<AlpLabel> partial{AlpLabel{s, {}, {}}};
        for (const auto& [rep, m] : s.mult) {
            i64 eg = e_of_orbit(ctx, rep);
            std::vector<AlpLabel> next;
            for (int w = 0; static_cast<i64>(w) * eg <= m; ++w) {
                int core_size = m - static_cast<int>(eg) * w;
                for (const auto& lam : partitions_of(core_size)) {
                    if (!lam.empty() && has_d_hook(lam, static_cast<int>(eg))) continue;
                    for (const auto& tuple : tower_tuples(w, eg, ctx.ell)) {
                        for (const auto& base : partial) {
                            AlpLabel lab = base;
                            lab.lambda[rep] = lam;
                            lab.K[rep] = tuple;
                            next.push_back(std::move(lab));
                        }
                    }
                }
            }
            partial = std::move(next);
        }
        for (auto& lab : partial) out.push_back(std::move(lab));
    }
    std::sort(out.begin(), out.end());
    return out;
}

AlpLabel omega(const GlobalContext& ctx, const IBrLabel& x) {
    AlpLabel y;
    y.s = x.s;
    for (const auto& [rep, mu] : x.mu) {
        i64 eg = e_of_orbit(ctx, rep);
        y.lambda[rep] = d_core(mu, static_cast<int>(eg));
        std::vector<CoreTower> towers;
        for (const auto& q : d_quotient(mu, static_cast<int>(eg)))
            towers.push_back(pi_m(q, ctx.ell));
        y.K[rep] = std::move(towers);
    }
    return y;
}

IBrLabel omega_inv(const GlobalContext& ctx, const AlpLabel& y) {
    IBrLabel x;
    x.s = y.s;
    for (const auto& [rep, lam] : y.lambda) {
        i64 eg = e_of_orbit(ctx, rep);
        std::vector<Partition> quot;
        for (const auto& f : y.K.at(rep)) quot.push_back(pi_m_inv(f));
        x.mu[rep] = from_core_and_quotient(lam, quot, static_cast<int>(eg));
    }
    return x;
}

namespace {

RootOfUnity act_rep(const GlobalContext& ctx, const RootOfUnity& zeta, const RootOfUnity& rep) {
    return orbit_of(ctx, mul_root(zeta, rep)).rep;
}

RootOfUnity aut_rep(const GlobalContext& ctx, AutKind kind, const RootOfUnity& rep) {
    return aut_act(ctx, kind, orbit_of(ctx, rep)).rep;
}

}  // namespace

IBrLabel zeta_act_label(const GlobalContext& ctx, const RootOfUnity& zeta, const IBrLabel& x) {
    if (ctx.q_minus_eta() % zeta.den != 0)
        throw invalid_argument("zeta order must divide q - eta");
    IBrLabel y;
    for (const auto& [rep, m] : x.s.mult) y.s.mult[act_rep(ctx, zeta, rep)] = m;
    for (const auto& [rep, mu] : x.mu) y.mu[act_rep(ctx, zeta, rep)] = mu;
    return y;
}

AlpLabel zeta_act_label(const GlobalContext& ctx, const RootOfUnity& zeta, const AlpLabel& x) {
    if (ctx.q_minus_eta() % zeta.den != 0)
        throw invalid_argument("zeta order must divide q - eta");
    AlpLabel y;
    for (const auto& [rep, m] : x.s.mult) y.s.mult[act_rep(ctx, zeta, rep)] = m;
    for (const auto& [rep, lam] : x.lambda) y.lambda[act_rep(ctx, zeta, rep)] = lam;
    for (const auto& [rep, tw] : x.K) y.K[act_rep(ctx, zeta, rep)] = tw;
    return y;
}

IBrLabel aut_act_label(const GlobalContext& ctx, AutKind kind, const IBrLabel& x) {
    IBrLabel y;
    for (const auto& [rep, m] : x.s.mult) y.s.mult[aut_rep(ctx, kind, rep)] = m;
    for (const auto& [rep, mu] : x.mu) y.mu[aut_rep(ctx, kind, rep)] = mu;
    return y;
}

AlpLabel aut_act_label(const GlobalContext& ctx, AutKind kind, const AlpLabel& x) {
    AlpLabel y;
    for (const auto& [rep, m] : x.s.mult) y.s.mult[aut_rep(ctx, kind, rep)] = m;
    for (const auto& [rep, lam] : x.lambda) y.lambda[aut_rep(ctx, kind, rep)] = lam;
    for (const auto& [rep, tw] : x.K) y.K[aut_rep(ctx, kind, rep)] = tw;
    return y;
}

unsigned deg_K(const GlobalContext& ctx, const AlpLabel& y) {
    (void)ctx;
    unsigned deg = kDegInfinity;
    for (const auto& [rep, towers] : y.K)
        for (const auto& f : towers) deg = std::min(deg, tower_degree(f));
    return deg;
}

KappaPair kappa_ibr(const GlobalContext& ctx, const IBrLabel& x) {
    KappaPair k;
    k.ell_prime = 0;
    for (const auto& zeta : ell_prime_center(ctx))
        if (zeta_act_label(ctx, zeta, x) == x) ++k.ell_prime;
    i64 delta = 0;
    for (const auto& [rep, mu] : x.mu) delta = gcd_i64(delta, delta_gcd(transpose(mu)));
    k.ell = gcd_i64(ctx.q_minus_eta(), delta);
    k.ell = ell_part(k.ell, ctx.ell);
    return k;
}

KappaPair kappa_alp(const GlobalContext& ctx, const AlpLabel& y) {
    KappaPair k;
    k.ell_prime = 0;
    for (const auto& zeta : ell_prime_center(ctx))
        if (zeta_act_label(ctx, zeta, y) == y) ++k.ell_prime;
    unsigned deg = deg_K(ctx, y);
    i64 lp = (deg == kDegInfinity) ? ell_part(ctx.q_minus_eta(), ctx.ell)
                                   : gcd_i64(ctx.q_minus_eta(), ipow(ctx.ell, deg));
    k.ell = ell_part(lp, ctx.ell);
    return k;
}

unsigned nu_valuation(const GlobalContext& ctx, u64 k) { return ctx.nu_qk_minus_1(k); }

unsigned nu_group_order(const GlobalContext& ctx, unsigned n) {
    unsigned v = 0;
    for (unsigned k = 1; k <= n; ++k) v += nu_valuation(ctx, k);
    return v;
}

unsigned defect_valuation(const GlobalContext& ctx, const IBrLabel& x) {
    unsigned v = 0;
    for (const auto& [rep, mu] : x.mu) {
        u64 d = static_cast<u64>(mult_order(ctx.eta_q(), rep.den));
        for (int h : hook_lengths(mu)) v += nu_valuation(ctx, d * static_cast<u64>(h));
    }
    return v;
}

bool defect_zero_ordinary(const GlobalContext& ctx, const AlpLabel& y) {
    for (const auto& [rep, lam] : y.lambda) {
        i64 eg = e_of_orbit(ctx, rep);
        if (!lam.empty() && has_d_hook(lam, static_cast<int>(eg))) return false;
        if (lam.empty()) continue;
    }
    return true;
}

std::vector<std::vector<IBrLabel>> zeta_orbits(const GlobalContext& ctx,
                                               const std::vector<IBrLabel>& labels) {
    std::set<IBrLabel> remaining(labels.begin(), labels.end());
    std::vector<std::vector<IBrLabel>> orbits;
    auto center = ell_prime_center(ctx);
    while (!remaining.empty()) {
        IBrLabel seed = *remaining.begin();
        std::set<IBrLabel> orbit;
        for (const auto& zeta : center) orbit.insert(zeta_act_label(ctx, zeta, seed));
        std::vector<IBrLabel> sorted(orbit.begin(), orbit.end());
        for (const auto& lab : sorted) remaining.erase(lab);
        orbits.push_back(std::move(sorted));
    }
    std::sort(orbits.begin(), orbits.end(),
              [](const auto& a, const auto& b) { return a.front() < b.front(); });
    return orbits;
}

CountResult count_labels(const GlobalContext& ctx, unsigned n, GroupKind kind) {
    CountResult res;
    auto ibr = enumerate_iIBr(ctx, n);
    auto alp = enumerate_iAlp(ctx, n);
    if (kind == GroupKind::gl) {
        res.ibr = static_cast<i64>(ibr.size());
        res.alp = static_cast<i64>(alp.size());
        return res;
    }
    if (n < 2) throw invalid_argument("sl counts need n >= 2");
    for (const auto& orbit : zeta_orbits(ctx, ibr)) {
        KappaPair k = kappa_ibr(ctx, orbit.front());
        res.ibr += k.ell_prime * k.ell;
    }
    // Weight side: orbit decomposition of iAlp under the same center action.
    std::set<AlpLabel> remaining(alp.begin(), alp.end());
    auto center = ell_prime_center(ctx);
    while (!remaining.empty()) {
        AlpLabel seed = *remaining.begin();
        std::set<AlpLabel> orbit;
        for (const auto& zeta : center) orbit.insert(zeta_act_label(ctx, zeta, seed));
        for (const auto& lab : orbit) remaining.erase(lab);
        KappaPair k = kappa_alp(ctx, seed);
        res.alp += k.ell_prime * k.ell;
    }
    return res;
}

}  // namespace wl
