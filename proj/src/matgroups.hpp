#pragma once

#include <unordered_set>
#include <vector>

#include "context.hpp"
#include "gf.hpp"

namespace wl {

// Dense little matrix over a table-backed field; entries are field logs + 1
// (0 encodes the zero element) packed as uint32.
struct Mat {
    int n = 0;
    std::vector<std::uint32_t> a;

    Mat() = default;
    Mat(int n_, std::vector<std::uint32_t> a_) : n(n_), a(std::move(a_)) {}

    friend bool operator==(const Mat&, const Mat&) = default;
    friend auto operator<=>(const Mat&, const Mat&) = default;
};

struct MatHash {
    size_t operator()(const Mat& m) const {
        size_t h = 1469598103934665603ull;
        for (auto v : m.a) {
            h ^= v;
            h *= 1099511628211ull;
        }
        return h;
    }
};

FF mat_get(const Mat& m, int i, int j);
void mat_set(Mat& m, int i, int j, FF v);
Mat mat_identity(const Field& F, int n);
Mat mat_mul(const Field& F, const Mat& x, const Mat& y);
Mat mat_inverse(const Field& F, const Mat& x);
FF mat_det(const Field& F, const Mat& x);
// Entrywise x -> x^q.
Mat mat_power_q(const Field& F, const Mat& x, i64 q);
Mat mat_transpose(const Mat& x);

inline constexpr i64 kDefaultClosureCap = 2'000'000;

// Fully enumerated matrix group: sorted element list plus the generators it
// was closed from.
struct FiniteMatrixGroup {
    FieldPtr F;
    int n = 0;
    std::vector<Mat> gens;
    std::vector<Mat> elements;  // sorted, deduplicated

    i64 order() const { return static_cast<i64>(elements.size()); }
    bool contains(const Mat& m) const;
};

FiniteMatrixGroup closure(FieldPtr F, int n, std::vector<Mat> gens,
                          i64 cap = kDefaultClosureCap);

FiniteMatrixGroup gl_group(int n, i64 q, i64 cap = kDefaultClosureCap);
FiniteMatrixGroup sl_group(int n, i64 q, i64 cap = kDefaultClosureCap);
FiniteMatrixGroup gu_group(int n, i64 q, i64 cap = kDefaultClosureCap);
FiniteMatrixGroup su_group(int n, i64 q, i64 cap = kDefaultClosureCap);

struct ConjClass {
    Mat rep;
    i64 size = 0;
    i64 element_order = 0;
};

struct ConjClassTable {
    std::vector<ConjClass> classes;
};

ConjClassTable conjugacy_classes(const FiniteMatrixGroup& G);
i64 ell_regular_class_count(const FiniteMatrixGroup& G, i64 ell);

i64 element_order(const Field& F, const Mat& x);

// A Sylow ell-subgroup, grown by repeated normalizer extension.
FiniteMatrixGroup sylow(const FiniteMatrixGroup& G, i64 ell);
// O_ell(G) = intersection of all conjugates of one Sylow ell-subgroup.
FiniteMatrixGroup o_ell(const FiniteMatrixGroup& G, i64 ell);

FiniteMatrixGroup normalizer(const FiniteMatrixGroup& G, const FiniteMatrixGroup& H);
FiniteMatrixGroup centralizer(const FiniteMatrixGroup& G, const FiniteMatrixGroup& H);

// Representatives of the G-conjugacy classes of radical ell-subgroups
// (R = O_ell(N_G(R))), from an exhaustive scan of the subgroups of one Sylow.
std::vector<FiniteMatrixGroup> radical_subgroups(const FiniteMatrixGroup& G, i64 ell,
                                                 i64 sylow_cap = 256);

FiniteMatrixGroup det_one_subgroup(const FiniteMatrixGroup& H);

// All subgroups of an ell-group (or any small group), as element sets.
std::vector<FiniteMatrixGroup> all_subgroups(const FiniteMatrixGroup& S);

bool are_conjugate(const FiniteMatrixGroup& G, const FiniteMatrixGroup& A,
                   const FiniteMatrixGroup& B);

// Subgroup generated by given elements of G (no cap; G already bounds it).
FiniteMatrixGroup subgroup_from(const FiniteMatrixGroup& G, std::vector<Mat> gens);

}  // namespace wl
