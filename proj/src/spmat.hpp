#pragma once

#include <vector>

#include "gf.hpp"

namespace wl {

// Row-sparse square matrix over a table-backed field.  The verified
// generators are monomial or tensor products with one small dense factor, so
// row sparsity stays bounded through every product the verifier forms.
struct SpMat {
    int n = 0;
    // rows[i]: (col, value) pairs, sorted by col, values nonzero
    std::vector<std::vector<std::pair<int, FF>>> rows;

    explicit SpMat(int n_ = 0) : n(n_), rows(static_cast<size_t>(n_)) {}

    void set(int i, int j, FF v);
    FF get(int i, int j) const;

    friend bool operator==(const SpMat&, const SpMat&) = default;
};

// Small dense matrix used as a tensor factor.
struct Dense {
    int n = 0;
    std::vector<FF> a;

    Dense() = default;
    Dense(int n_, std::vector<FF> a_) : n(n_), a(std::move(a_)) {}
    FF at(int i, int j) const { return a[static_cast<size_t>(i * n + j)]; }
    FF& at(int i, int j) { return a[static_cast<size_t>(i * n + j)]; }
    static Dense identity(const Field& F, int n);
    friend bool operator==(const Dense&, const Dense&) = default;
};

SpMat sp_identity(const Field& F, int n);
SpMat sp_scalar(const Field& F, int n, FF c);
SpMat sp_from_dense(const Dense& d);
// kron(A, B) follows the convention A (x) B = (b_ij A): A runs on the fast index.
SpMat sp_kron(const Field& F, const SpMat& a, const SpMat& b);
SpMat sp_mul(const Field& F, const SpMat& a, const SpMat& b);
SpMat sp_scale(const Field& F, const SpMat& a, FF c);
SpMat sp_transpose(const SpMat& a);
SpMat sp_pow(const Field& F, const SpMat& a, i64 e);
// Entrywise x -> x^q.
SpMat sp_entrywise_q(const Field& F, const SpMat& a, i64 q);
bool sp_is_monomial(const SpMat& a);
SpMat sp_inverse(const Field& F, const SpMat& a);
FF sp_det_dense(const Field& F, const SpMat& a);  // Gaussian elimination
Dense dense_mul(const Field& F, const Dense& a, const Dense& b);
Dense dense_inverse(const Field& F, const Dense& a);
FF dense_det(const Field& F, const Dense& a);
Dense dense_entrywise_q(const Field& F, const Dense& a, i64 q);
Dense dense_transpose(const Dense& a);

// Block diagonal of the given blocks (all the same size).
SpMat sp_block_diag(const Field& F, const std::vector<SpMat>& blocks);

// Permutation matrix sending basis vector j to perm[j] (entries 1).
SpMat sp_perm(const Field& F, const std::vector<int>& perm);

i64 sp_order(const Field& F, const SpMat& a, i64 cap = 1 << 20);

struct SpMatHash {
    size_t operator()(const SpMat& m) const {
        size_t h = 1469598103934665603ull;
        for (const auto& row : m.rows)
            for (auto [c, v] : row) {
                h ^= static_cast<size_t>(c) * 1099511628211ull + static_cast<size_t>(v + 2);
                h *= 1099511628211ull;
            }
        return h;
    }
};

// BFS closure of the generated matrix group; throws cap_exceeded beyond cap.
std::vector<SpMat> sp_closure(const Field& F, const std::vector<SpMat>& gens, i64 cap);

}  // namespace wl
