#pragma once

#include <map>
#include <optional>
#include <vector>

#include "partitions.hpp"
#include "roots.hpp"

namespace wl {

// Semisimple element label: multiplicity function on Frobenius orbits with
// sum m_Gamma * d_Gamma = n.  Key = orbit representative.
struct SemisimpleLabel {
    std::map<RootOfUnity, int> mult;  // rep -> m_Gamma(s) > 0

    int degree(const GlobalContext& ctx) const;
    friend bool operator==(const SemisimpleLabel&, const SemisimpleLabel&) = default;
    friend auto operator<=>(const SemisimpleLabel&, const SemisimpleLabel&) = default;
};

// (s, mu): mu assigns a partition of m_Gamma(s) to each elementary divisor.
struct IBrLabel {
    SemisimpleLabel s;
    std::map<RootOfUnity, Partition> mu;

    friend bool operator==(const IBrLabel&, const IBrLabel&) = default;
    friend auto operator<=>(const IBrLabel&, const IBrLabel&) = default;
};

// (s, lambda, K): lambda_Gamma an e_Gamma-core, K_Gamma an e_Gamma-tuple of
// core towers with m_Gamma(s) = |lambda_Gamma| + e_Gamma * w_Gamma.
struct AlpLabel {
    SemisimpleLabel s;
    std::map<RootOfUnity, Partition> lambda;
    std::map<RootOfUnity, std::vector<CoreTower>> K;

    friend bool operator==(const AlpLabel&, const AlpLabel&) = default;
    friend auto operator<=>(const AlpLabel&, const AlpLabel&) = default;
};

std::vector<SemisimpleLabel> enumerate_semisimple(const GlobalContext& ctx, unsigned n,
                                                  bool ell_prime);

std::vector<IBrLabel> enumerate_iIBr(const GlobalContext& ctx, unsigned n);
std::vector<AlpLabel> enumerate_iAlp(const GlobalContext& ctx, unsigned n);

// The combinatorial bijection: lambda_Gamma = e_Gamma-core of mu_Gamma and
// K_Gamma = componentwise pi_m image of the e_Gamma-quotient.
AlpLabel omega(const GlobalContext& ctx, const IBrLabel& x);
IBrLabel omega_inv(const GlobalContext& ctx, const AlpLabel& y);

IBrLabel zeta_act_label(const GlobalContext& ctx, const RootOfUnity& zeta, const IBrLabel& x);
AlpLabel zeta_act_label(const GlobalContext& ctx, const RootOfUnity& zeta, const AlpLabel& x);
IBrLabel aut_act_label(const GlobalContext& ctx, AutKind kind, const IBrLabel& x);
AlpLabel aut_act_label(const GlobalContext& ctx, AutKind kind, const AlpLabel& x);

// deg(K) = min over elementary divisors of the flattened tower degree
// (kDegInfinity when every tower is empty; only reachable when ell does not
// divide q - eta, where the value is immaterial).
unsigned deg_K(const GlobalContext& ctx, const AlpLabel& y);

struct KappaPair {
    i64 ell_prime = 1;  // stabilizer order under O_{ell'}(Z_{q-eta})
    i64 ell = 1;        // ell-part of the restriction multiplicity
};

KappaPair kappa_ibr(const GlobalContext& ctx, const IBrLabel& x);
KappaPair kappa_alp(const GlobalContext& ctx, const AlpLabel& y);

struct CountResult {
    i64 ibr = 0;
    i64 alp = 0;
};

enum class GroupKind { gl, sl };

// gl: raw label counts.  sl: kappa-weighted sums over O_{ell'}-orbit
// representatives (n >= 2 required).
CountResult count_labels(const GlobalContext& ctx, unsigned n, GroupKind kind);

// v_ell((eta q)^k - 1); thin wrapper kept close to the label layer that uses it.
unsigned nu_valuation(const GlobalContext& ctx, u64 k);

// Hook-sum defect: v_ell(|GL_n(eta q)|) - v_ell(chi(1)) for the Brauer label x.
unsigned defect_valuation(const GlobalContext& ctx, const IBrLabel& x);

// v_ell(|GL_n(eta q)|) as the sum of nu_valuation over k = 1..n.
unsigned nu_group_order(const GlobalContext& ctx, unsigned n);

// Validator: every lambda_Gamma free of e_Gamma-hooks.
bool defect_zero_ordinary(const GlobalContext& ctx, const AlpLabel& y);

// Partition of labels into O_{ell'}(Z_{q-eta})-orbits; each orbit is sorted and
// identified by its first element.
std::vector<std::vector<IBrLabel>> zeta_orbits(const GlobalContext& ctx,
                                               const std::vector<IBrLabel>& labels);

}  // namespace wl
