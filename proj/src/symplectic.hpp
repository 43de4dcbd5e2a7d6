#pragma once

#include <string>

#include "context.hpp"
#include "radical.hpp"
#include "roots.hpp"
#include "spmat.hpp"

namespace wl {

// One generator with its structurally computed determinant.
struct GenRecord {
    std::string name;
    SpMat mat;
    FF det = 0;
};

// Explicit generators of a symplectic-type subgroup together with its
// normalizer pieces, all at the GL_{m ell^gamma}((eta q)^{e ell^alpha}) level
// (or at the twisted level for the S / E-minus families).
struct SymplecticTypeGens {
    GlobalContext ctx;
    FieldPtr F;
    ShapeKind kind = ShapeKind::R;
    i64 m = 1;
    unsigned alpha = 0;
    unsigned gamma = 0;
    int deg0 = 1;  // degree of the matrices below

    FF zeta = 0;      // fixed root of order ell^{a+alpha} (R kinds); 2^{a+1} for S
    FF zeta_ell = 0;  // primitive ell-th root when used
    FF lambda = 0;    // sqrt(2 zeta_4), ell = 2 only

    GenRecord z;                  // cyclic part (R, S); unused for E kinds
    std::vector<GenRecord> xs;    // x_{m,gamma,j}
    std::vector<GenRecord> ys;    // y_{m,gamma,j}
    GenRecord tau;                // S kind only
    std::vector<GenRecord> ngens; // normalizer generators n^{(...)}

    // Twisting element v of the ambient twisted group; for R kinds the
    // generators above still live one hbar-embedding below it.
    SpMat v;
    bool twisted_level = false;  // true when the generators already live in G~^{v F}
};

// Normalized Vandermonde V_0(zeta_ell) = mu V(zeta_ell) with det 1.
Dense vandermonde_v0(const Field& F, i64 ell, FF zeta_ell, bool corrupt_normalization = false);

// Block-diagonal twisted embedding A -> diag(A, F(A), ..., F^{e ell^alpha - 1}(A)).
SpMat hbar_embed(const GlobalContext& ctx, const Field& F, const SpMat& A, unsigned alpha);
FF hbar_det(const GlobalContext& ctx, const Field& F, FF detA, unsigned alpha);

// v F(B) v^{-1} = B, with F the eta-twisted Frobenius (entrywise q-power,
// composed with transpose-inverse when eta = -1).
bool in_twisted_group(const GlobalContext& ctx, const Field& F, const SpMat& v, const SpMat& B);

// The twisting element v_{m,alpha,gamma} = I_{m ell^gamma} (x) v_alpha.
SpMat twisting_element(const GlobalContext& ctx, const Field& F, i64 m, unsigned alpha,
                       unsigned gamma);

// Field big enough for every generator matrix at (m, alpha, gamma).
FieldPtr symplectic_field(const GlobalContext& ctx, unsigned alpha);

SymplecticTypeGens build_generators(const GlobalContext& ctx, i64 m, unsigned alpha,
                                    unsigned gamma, ShapeKind kind,
                                    bool corrupt_vandermonde = false);

// The n^{(...)} list alone.
std::vector<GenRecord> normalizer_generators(const GlobalContext& ctx, i64 m, unsigned alpha,
                                             unsigned gamma, ShapeKind kind);

// Base-group generators repeated block-diagonally plus block permutations
// realizing A_{c_1} wr ... wr A_{c_r}; sign_adjust_first swaps the first-level
// A_1 for the determinant-1 rotation block.
std::vector<SpMat> wreath_basic(const Field& F, const std::vector<SpMat>& gens,
                                const std::vector<unsigned>& c, i64 ell,
                                bool sign_adjust_first);

struct ClaimResult {
    std::string id;
    std::string params;
    bool pass = true;
    std::string witness;
};

struct SectionReport {
    std::vector<ClaimResult> claims;
    bool all_pass() const {
        for (const auto& c : claims)
            if (!c.pass) return false;
        return true;
    }
    i64 fail_count() const {
        i64 k = 0;
        for (const auto& c : claims)
            if (!c.pass) ++k;
        return k;
    }
};

struct VerifyOptions {
    bool corrupt_vandermonde = false;
    i64 closure_cap = 60000;  // skip order checks predicted beyond this
};

// All generator/determinant claims at one parameter point (every applicable kind).
void verify_point(const GlobalContext& ctx, i64 m, unsigned alpha, unsigned gamma,
                  const VerifyOptions& opts, SectionReport& report);

struct GridSpec {
    std::vector<std::pair<i64, i64>> ell_q;  // (ell, q)
    i64 m_max = 3;
    unsigned alpha_max = 1;
    unsigned gamma_max = 2;
};

GridSpec default_grid();

SectionReport verify_section3(const GridSpec& grid, const VerifyOptions& opts);

}  // namespace wl
