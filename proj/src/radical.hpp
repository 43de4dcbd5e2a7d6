#pragma once

#include <optional>
#include <vector>

#include "context.hpp"

namespace wl {

// Kinds of basic radical-subgroup building blocks.  R covers the symplectic
// type Z_alpha E_gamma family (all contexts); S (the semidihedral central
// products), Eplus and Eminus exist only for ell = 2 with 4 | q + eta.
enum class ShapeKind { R, Eplus, Eminus, S };

// Arithmetic descriptor of a basic subgroup wreathed with A_c:
// degree m * e * ell^{alpha + gamma + |c|}.
struct BasicShape {
    ShapeKind kind = ShapeKind::R;
    i64 m = 1;
    unsigned alpha = 0;
    unsigned gamma = 0;
    std::vector<unsigned> c;

    unsigned c_total() const {
        unsigned t = 0;
        for (unsigned ci : c) t += ci;
        return t;
    }

    friend bool operator==(const BasicShape&, const BasicShape&) = default;
    friend auto operator<=>(const BasicShape&, const BasicShape&) = default;
};

// Product of basic shapes together with a trivial block of degree n0;
// components kept sorted so multiset equality is syntactic.
struct RadicalShape {
    i64 n0 = 0;
    std::vector<BasicShape> components;

    void canonicalize();
    friend bool operator==(const RadicalShape&, const RadicalShape&) = default;
};

// Orders of det(R~), det(R~C~), det(N~) as subgroups of Z_{q-eta}.
struct DetInfo {
    i64 order_det_R = 1;
    i64 order_det_RC = 1;
    i64 order_det_N = 1;
};

enum class ExceptionalCase { none, ell3, ell2_linear, ell2_unitary };

enum class XiCase { special, i, ii, iii, iv, v, vi, vii, viii, ix };

// Validates shape parameters against the context (kind availability, gamma
// ranges, the excluded ell = 2 unitary wreath with alpha = gamma = 0, c1 = 1).
// strict = false admits non-basic shapes that still occur inside products.
void validate_shape(const GlobalContext& ctx, const BasicShape& shape, bool strict = true);

i64 shape_degree(const GlobalContext& ctx, const BasicShape& shape);
i64 shape_degree(const GlobalContext& ctx, const RadicalShape& shape);

// a(R~_i) = v(m) + gamma and delta(R~_i) = gamma + |c|.
unsigned shape_a(const GlobalContext& ctx, const BasicShape& shape);
unsigned shape_delta(const BasicShape& shape);

// Predicted group-theoretic invariants, used to match brute-force classes.
i64 shape_group_order(const GlobalContext& ctx, const BasicShape& shape);
i64 shape_group_order(const GlobalContext& ctx, const RadicalShape& shape);
i64 shape_center_order(const GlobalContext& ctx, const BasicShape& shape);
i64 shape_center_order(const GlobalContext& ctx, const RadicalShape& shape);
bool shape_abelian(const GlobalContext& ctx, const BasicShape& shape);
bool shape_abelian(const GlobalContext& ctx, const RadicalShape& shape);
i64 shape_exponent(const GlobalContext& ctx, const BasicShape& shape);
i64 shape_exponent(const GlobalContext& ctx, const RadicalShape& shape);

bool is_special_basic(const GlobalContext& ctx, const BasicShape& shape);
bool is_special_product(const GlobalContext& ctx, const RadicalShape& shape);
bool is_special(const GlobalContext& ctx, const RadicalShape& shape);

DetInfo det_info(const GlobalContext& ctx, const BasicShape& shape);
DetInfo det_info(const GlobalContext& ctx, const RadicalShape& shape);

// Number of G-conjugacy classes of R~ \cap G inside the G~-class of R~;
// requires the shape to be special.
i64 splitting_count(const GlobalContext& ctx, const BasicShape& shape);
i64 splitting_count(const GlobalContext& ctx, const RadicalShape& shape);

ExceptionalCase exceptional_weight_case(const GlobalContext& ctx, const RadicalShape& shape);

// The D~ substitution for ell = 2, 4 | q + eta (identity on non-R kinds).
BasicShape substitute_D(const GlobalContext& ctx, const BasicShape& shape);

// Which replacement rule applies to a non-special weight-bearing shape.
XiCase xi_case(const GlobalContext& ctx, const RadicalShape& shape);

const char* xi_case_name(XiCase c);
const char* exceptional_case_name(ExceptionalCase c);

// All basic shapes of exactly the given degree (strictly valid ones).
std::vector<BasicShape> enumerate_basic_shapes(const GlobalContext& ctx, i64 degree);
// All candidate radical shapes of total degree n (products plus trivial block).
std::vector<RadicalShape> enumerate_radical_shapes(const GlobalContext& ctx, i64 n);

}  // namespace wl
