#include "roots.hpp"

#include <algorithm>
#include <set>

namespace wl {

RootOrbit orbit_of(const GlobalContext& ctx, const RootOfUnity& xi) {
    if (gcd_i64(xi.den, ctx.p) != 1)
        throw invalid_argument("root order not prime to p");
    RootOrbit orb;
    std::set<RootOfUnity> seen;
    RootOfUnity cur = xi;
    do {
        seen.insert(cur);
        cur = frobenius(ctx, cur);
    } while (!seen.count(cur));
    orb.members.assign(seen.begin(), seen.end());
    orb.rep = orb.members.front();
    orb.d = static_cast<i64>(orb.members.size());
    orb.e_gamma = (ctx.ell == 2)
                      ? 1
                      : mult_order(pow_mod(ctx.eta_q(), static_cast<u64>(orb.d), ctx.ell), ctx.ell);
    i64 n = orb.e_gamma * orb.d;
    if (n % ctx.e != 0)
        throw invalid_argument("orbit invariant violated: e does not divide e_gamma * d");
    i64 m = n / ctx.e;
    orb.alpha_gamma = valuation(m, ctx.ell);
    orb.m_gamma = m / ipow(ctx.ell, orb.alpha_gamma);
    return orb;
}

std::vector<RootOrbit> enumerate_orbits(const GlobalContext& ctx, unsigned n,
                                        bool ell_prime_only) {
    if (n == 0) throw invalid_argument("enumerate_orbits: n must be positive");
    std::set<i64> dens;
    for (unsigned d = 1; d <= n; ++d)
        for (i64 den : divisors(ctx.abs_qk_minus_etak(d))) dens.insert(den);
    std::vector<RootOrbit> out;
    for (i64 den : dens) {
        if (ell_prime_only && den % ctx.ell == 0) continue;
        i64 d = mult_order(ctx.eta_q(), den);
        if (d > static_cast<i64>(n)) continue;
        std::set<i64> used;
        for (i64 num = (den == 1 ? 0 : 1); num < den; ++num) {
            if (den != 1 && gcd_i64(num, den) != 1) continue;
            if (used.count(num)) continue;
            RootOrbit orb = orbit_of(ctx, RootOfUnity(num, den));
            for (const auto& r : orb.members) used.insert(r.num);
            out.push_back(std::move(orb));
            if (den == 1) break;
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

RootOfUnity norm_map(const GlobalContext& ctx, unsigned alpha, const RootOfUnity& xi) {
    i64 degree = ctx.e * ipow(ctx.ell, alpha);
    i64 modulus = ctx.abs_qk_minus_etak(static_cast<unsigned>(degree));
    if (modulus % xi.den != 0)
        throw invalid_argument("norm_map: root order does not divide q^{e ell^alpha} - eta^{e ell^alpha}");
    i64 step = mod_pos(ctx.eta_q(), xi.den);
    i64 mult = 0, pw = 1 % xi.den;
    for (i64 i = 0; i < degree; ++i) {
        mult = mod_pos(mult + pw, xi.den);
        pw = mul_mod(pw, step, xi.den);
    }
    return RootOfUnity(xi.num * mult % xi.den, xi.den);
}

std::vector<std::vector<RootOfUnity>> extension_orbits(const GlobalContext& ctx,
                                                       unsigned alpha, unsigned d_cap) {
    i64 degree = ctx.e * ipow(ctx.ell, alpha);
    i64 modulus = ctx.abs_qk_minus_etak(static_cast<unsigned>(degree));
    i64 step = pow_mod(ctx.eta_q(), static_cast<u64>(degree), modulus);
    std::vector<std::vector<RootOfUnity>> out;
    for (i64 den : divisors(modulus)) {
        if (d_cap > 0 && mult_order(ctx.eta_q(), den) > static_cast<i64>(d_cap)) continue;
        std::set<i64> used;
        for (i64 num = (den == 1 ? 0 : 1); num < den; ++num) {
            if (den != 1 && gcd_i64(num, den) != 1) continue;
            if (used.count(num)) continue;
            std::vector<RootOfUnity> orb;
            i64 cur = num;
            do {
                used.insert(cur);
                orb.emplace_back(cur, den);
                cur = mul_mod(cur, step % den, den);
            } while (cur != num);
            std::sort(orb.begin(), orb.end());
            out.push_back(std::move(orb));
            if (den == 1) break;
        }
    }
    std::sort(out.begin(), out.end(), [](const auto& x, const auto& y) {
        return x.front() < y.front();
    });
    return out;
}

std::vector<RootOrbit> phi_alpha(const GlobalContext& ctx, unsigned alpha,
                                 const std::vector<RootOfUnity>& extension_orbit) {
    if (extension_orbit.empty()) throw invalid_argument("phi_alpha: empty input");
    i64 degree = ctx.e * ipow(ctx.ell, alpha);
    i64 step = pow_mod(ctx.eta_q(), static_cast<u64>(degree), extension_orbit.front().den);
    std::set<RootOfUnity> input(extension_orbit.begin(), extension_orbit.end());
    // Precondition: the input is a single orbit under multiplication by step.
    for (const auto& r : input) {
        if (r.den != extension_orbit.front().den)
            throw invalid_argument("phi_alpha: mixed denominators");
        if (!input.count(root_pow(r, step)))
            throw invalid_argument("phi_alpha: input is not an extension-Frobenius orbit");
    }
    {
        std::set<RootOfUnity> gen;
        RootOfUnity cur = extension_orbit.front();
        do {
            gen.insert(cur);
            cur = root_pow(cur, step);
        } while (!gen.count(cur));
        if (gen != input)
            throw invalid_argument("phi_alpha: input is not a single extension-Frobenius orbit");
    }
    std::set<RootOfUnity> closure = input, frontier = input;
    while (!frontier.empty()) {
        std::set<RootOfUnity> next;
        for (const auto& r : frontier) {
            RootOfUnity fr = frobenius(ctx, r);
            if (closure.insert(fr).second) next.insert(fr);
        }
        frontier = std::move(next);
    }
    std::vector<RootOrbit> out;
    std::set<RootOfUnity> seen;
    for (const auto& r : closure) {
        if (seen.count(r)) continue;
        RootOrbit orb = orbit_of(ctx, r);
        seen.insert(orb.members.begin(), orb.members.end());
        out.push_back(std::move(orb));
    }
    std::sort(out.begin(), out.end());
    return out;
}

RootOrbit zeta_act_orbit(const GlobalContext& ctx, const RootOfUnity& zeta,
                         const RootOrbit& gamma) {
    if (ctx.q_minus_eta() % zeta.den != 0)
        throw invalid_argument("zeta order must divide q - eta");
    return orbit_of(ctx, mul_root(zeta, gamma.rep));
}

RootOrbit aut_act(const GlobalContext& ctx, AutKind kind, const RootOrbit& gamma) {
    RootOfUnity image = (kind == AutKind::field_p) ? root_pow(gamma.rep, ctx.p)
                                                   : root_inverse(gamma.rep);
    return orbit_of(ctx, image);
}

std::vector<RootOfUnity> ell_prime_center(const GlobalContext& ctx) {
    i64 d = ell_prime_part(ctx.q_minus_eta(), ctx.ell);
    std::vector<RootOfUnity> out;
    out.reserve(static_cast<size_t>(d));
    for (i64 k = 0; k < d; ++k) out.emplace_back(k, d);
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace wl
