#pragma once

#include <vector>

#include "context.hpp"

namespace wl {

// A prime-to-p root of unity, stored as the reduced fraction num/den in Q/Z.
// Multiplying roots adds fractions mod 1; the order of the root is den.
struct RootOfUnity {
    i64 num = 0;
    i64 den = 1;

    RootOfUnity() = default;
    RootOfUnity(i64 n, i64 d) {
        if (d <= 0) throw invalid_argument("root denominator must be positive");
        n = mod_pos(n, d);
        i64 g = gcd_i64(n, d);
        if (n == 0) {
            num = 0;
            den = 1;
        } else {
            num = n / g;
            den = d / g;
        }
    }

    bool is_one() const { return num == 0; }
    i64 order() const { return den; }

    friend bool operator==(const RootOfUnity&, const RootOfUnity&) = default;
    friend auto operator<=>(const RootOfUnity& x, const RootOfUnity& y) {
        if (auto c = x.den <=> y.den; c != 0) return c;
        return x.num <=> y.num;
    }
};

inline RootOfUnity mul_root(const RootOfUnity& x, const RootOfUnity& y) {
    i64 d = lcm_i64(x.den, y.den);
    return RootOfUnity(x.num * (d / x.den) + y.num * (d / y.den), d);
}

inline RootOfUnity root_pow(const RootOfUnity& x, i64 k) {
    return RootOfUnity(mod_pos(k, x.den) * x.num % x.den, x.den);
}

inline RootOfUnity root_inverse(const RootOfUnity& x) { return RootOfUnity(-x.num, x.den); }

// xi -> xi^{eta q}.
inline RootOfUnity frobenius(const GlobalContext& ctx, const RootOfUnity& xi) {
    if (gcd_i64(xi.den, ctx.p) != 1)
        throw invalid_argument("root order not prime to p");
    return root_pow(xi, ctx.eta_q());
}

// A Frobenius orbit of roots of unity; the combinatorial stand-in for an
// elementary divisor polynomial Gamma.  Invariants:
//   d        = |orbit| = order of eta*q mod den,
//   e_gamma  = order of (eta q)^d mod ell  (1 when ell = 2),
//   m_gamma * e * ell^alpha_gamma = e_gamma * d  with gcd(m_gamma, ell) = 1.
struct RootOrbit {
    RootOfUnity rep;                  // lexicographic minimum under (den, num)
    std::vector<RootOfUnity> members; // sorted ascending
    i64 d = 1;
    i64 e_gamma = 1;
    i64 m_gamma = 1;
    unsigned alpha_gamma = 0;

    friend bool operator==(const RootOrbit& x, const RootOrbit& y) { return x.rep == y.rep; }
    friend auto operator<=>(const RootOrbit& x, const RootOrbit& y) {
        if (auto c = x.d <=> y.d; c != 0) return c;
        return x.rep <=> y.rep;
    }
};

RootOrbit orbit_of(const GlobalContext& ctx, const RootOfUnity& xi);

// All orbits with d_Gamma <= n, each exactly once, sorted by (d, den, num).
// ell_prime_only keeps only orbits of roots of ell'-order (the set F').
std::vector<RootOrbit> enumerate_orbits(const GlobalContext& ctx, unsigned n,
                                        bool ell_prime_only);

// Norm map from roots of order dividing |q^{e ell^alpha} - eta^{e ell^alpha}|
// down to roots of order dividing q - eta: exponent multiplied by
// 1 + (eta q) + ... + (eta q)^{e ell^alpha - 1}.
RootOfUnity norm_map(const GlobalContext& ctx, unsigned alpha, const RootOfUnity& xi);

// Orbits of the extension Frobenius x -> x^{(eta q)^{e ell^alpha}} on roots of
// order dividing |q^{e ell^alpha} - eta^{e ell^alpha}|; the domain of Phi_alpha.
std::vector<std::vector<RootOfUnity>> extension_orbits(const GlobalContext& ctx,
                                                       unsigned alpha, unsigned d_cap);

// Phi_alpha: maps an orbit under x -> x^{(eta q)^{e ell^alpha}} to the list of
// full Frobenius orbits partitioning its closure under x -> x^{eta q} (a single
// orbit; returned as a list to expose the fiber structure uniformly).
std::vector<RootOrbit> phi_alpha(const GlobalContext& ctx, unsigned alpha,
                                 const std::vector<RootOfUnity>& extension_orbit);

// zeta.Gamma for zeta of order dividing q - eta.
RootOrbit zeta_act_orbit(const GlobalContext& ctx, const RootOfUnity& zeta,
                         const RootOrbit& gamma);

enum class AutKind { field_p, graph };

// Action of the field automorphism (p-th power on roots) resp. the graph
// automorphism (inversion) on orbits.
RootOrbit aut_act(const GlobalContext& ctx, AutKind kind, const RootOrbit& gamma);

// The group O_{ell'}(Z_{q-eta}) as explicit roots of unity, sorted.
std::vector<RootOfUnity> ell_prime_center(const GlobalContext& ctx);

}  // namespace wl
