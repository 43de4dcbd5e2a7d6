#pragma once

#include "arith.hpp"

namespace wl {

// Sign eta: +1 selects GL_n(q)/SL_n(q), -1 selects GU_n(q)/SU_n(q)
// (written GL_n(-q) throughout).
enum class Eta : int { plus = 1, minus = -1 };

inline int eta_int(Eta e) { return static_cast<int>(e); }

// Arithmetic environment shared by all modules: the defining prime power
// q = p^f, the sign eta, the cross-characteristic prime ell, the order e of
// eta*q modulo ell, and the valuation constant a.
struct GlobalContext {
    i64 p = 0;
    unsigned f = 0;
    i64 q = 0;
    Eta eta = Eta::plus;
    i64 ell = 0;
    i64 e = 0;       // order of eta*q mod ell (1 when ell = 2)
    unsigned a = 0;  // ell odd: v((eta q)^e - 1); ell = 2: v(q -+ eta) per the 4 | q -+ eta split

    GlobalContext() = default;

    GlobalContext(i64 q_, Eta eta_, i64 ell_) : q(q_), eta(eta_), ell(ell_) {
        auto [pp, ff] = prime_power_decompose(q_);
        p = pp;
        f = ff;
        if (!is_prime(ell_)) throw invalid_argument("ell must be prime");
        if (ell_ == p) throw invalid_argument("ell must differ from the defining characteristic");
        if (ell == 2) {
            e = 1;
            if ((q - eta_i()) % 4 == 0)
                a = valuation(q - eta_i(), 2);
            else
                a = valuation(q + eta_i(), 2);
        } else {
            e = mult_order(mod_pos(eta_i() * q, ell), ell);
            a = valuation(abs_qk_minus_etak(static_cast<unsigned>(e)), ell);
        }
    }

    i64 eta_i() const { return eta_int(eta); }
    i64 eta_q() const { return eta_i() * q; }
    // |G~/G| = q - eta as a positive integer.
    i64 q_minus_eta() const { return q - eta_i(); }

    bool ell2_linear() const { return ell == 2 && (q - eta_i()) % 4 == 0; }
    bool ell2_unitary() const { return ell == 2 && (q + eta_i()) % 4 == 0; }

    // v_ell((eta q)^k - 1), exact case analysis.
    unsigned nu_qk_minus_1(u64 k) const {
        if (k == 0) throw invalid_argument("nu_valuation: k must be positive");
        if (ell != 2) {
            if (k % static_cast<u64>(e) != 0) return 0;
            return a + valuation(static_cast<i64>(k), ell);
        }
        if (ell2_linear()) return a + valuation(static_cast<i64>(k), 2);
        // 4 | q + eta
        if (k % 2 == 0) return a + valuation(static_cast<i64>(k), 2);
        return 1;
    }

    // |q^k - eta^k| = |(eta q)^k - 1|, the modulus whose divisors carry the
    // roots with Frobenius orbit size dividing k.
    i64 abs_qk_minus_etak(unsigned k) const {
        __int128 v = 1;
        for (unsigned i = 0; i < k; ++i) v *= eta_q();
        v -= 1;
        if (v < 0) v = -v;
        if (v > static_cast<__int128>(INT64_MAX))
            throw cap_exceeded("q^k - eta^k exceeds 64-bit range");
        return static_cast<i64>(v);
    }
};

}  // namespace wl
