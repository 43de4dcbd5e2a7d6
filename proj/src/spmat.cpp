#include "spmat.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <unordered_set>

namespace wl {

void SpMat::set(int i, int j, FF v) {
    auto& row = rows[static_cast<size_t>(i)];
    auto it = std::lower_bound(row.begin(), row.end(), j,
                               [](const auto& e, int col) { return e.first < col; });
    if (it != row.end() && it->first == j) {
        if (v == FF_ZERO)
            row.erase(it);
        else
            it->second = v;
    } else if (v != FF_ZERO) {
        row.insert(it, {j, v});
    }
}

FF SpMat::get(int i, int j) const {
    const auto& row = rows[static_cast<size_t>(i)];
    auto it = std::lower_bound(row.begin(), row.end(), j,
                               [](const auto& e, int col) { return e.first < col; });
    if (it != row.end() && it->first == j) return it->second;
    return FF_ZERO;
}

Dense Dense::identity(const Field& F, int n) {
    Dense d(n, std::vector<FF>(static_cast<size_t>(n * n), FF_ZERO));
    for (int i = 0; i < n; ++i) d.at(i, i) = F.one();
    return d;
}

SpMat sp_identity(const Field& F, int n) { return sp_scalar(F, n, F.one()); }

SpMat sp_scalar(const Field& F, int n, FF c) {
    (void)F;
    SpMat m(n);
    if (c != FF_ZERO)
        for (int i = 0; i < n; ++i) m.rows[static_cast<size_t>(i)] = {{i, c}};
    return m;
}

SpMat sp_from_dense(const Dense& d) {
    SpMat m(d.n);
    for (int i = 0; i < d.n; ++i)
        for (int j = 0; j < d.n; ++j)
            if (d.at(i, j) != FF_ZERO) m.rows[static_cast<size_t>(i)].emplace_back(j, d.at(i, j));
    return m;
}

SpMat sp_kron(const Field& F, const SpMat& a, const SpMat& b) {
    SpMat m(a.n * b.n);
    for (int ib = 0; ib < b.n; ++ib)
        for (auto [jb, vb] : b.rows[static_cast<size_t>(ib)])
            for (int ia = 0; ia < a.n; ++ia)
                for (auto [ja, va] : a.rows[static_cast<size_t>(ia)])
                    m.set(ib * a.n + ia, jb * a.n + ja, F.mul(vb, va));
    return m;
}

SpMat sp_mul(const Field& F, const SpMat& a, const SpMat& b) {
    SpMat m(a.n);
    std::vector<FF> acc(static_cast<size_t>(a.n), FF_ZERO);
    std::vector<int> touched;
    for (int i = 0; i < a.n; ++i) {
        touched.clear();
        for (auto [k, va] : a.rows[static_cast<size_t>(i)])
            for (auto [j, vb] : b.rows[static_cast<size_t>(k)]) {
                FF prod = F.mul(va, vb);
                if (acc[static_cast<size_t>(j)] == FF_ZERO) touched.push_back(j);
                acc[static_cast<size_t>(j)] = F.add(acc[static_cast<size_t>(j)], prod);
            }
        std::sort(touched.begin(), touched.end());
        auto& row = m.rows[static_cast<size_t>(i)];
        for (int j : touched) {
            if (acc[static_cast<size_t>(j)] != FF_ZERO) row.emplace_back(j, acc[static_cast<size_t>(j)]);
            acc[static_cast<size_t>(j)] = FF_ZERO;
        }
    }
    return m;
}

SpMat sp_scale(const Field& F, const SpMat& a, FF c) {
    SpMat m(a.n);
    if (c == FF_ZERO) return m;
    for (int i = 0; i < a.n; ++i)
        for (auto [j, v] : a.rows[static_cast<size_t>(i)])
            m.rows[static_cast<size_t>(i)].emplace_back(j, F.mul(v, c));
    return m;
}

SpMat sp_transpose(const SpMat& a) {
    SpMat m(a.n);
    for (int i = 0; i < a.n; ++i)
        for (auto [j, v] : a.rows[static_cast<size_t>(i)]) m.rows[static_cast<size_t>(j)].emplace_back(i, v);
    for (auto& row : m.rows)
        std::sort(row.begin(), row.end());
    return m;
}

SpMat sp_pow(const Field& F, const SpMat& a, i64 e) {
    if (e < 0) return sp_pow(F, sp_inverse(F, a), -e);
    SpMat r = sp_identity(F, a.n);
    SpMat base = a;
    while (e) {
        if (e & 1) r = sp_mul(F, r, base);
        base = sp_mul(F, base, base);
        e >>= 1;
    }
    return r;
}

SpMat sp_entrywise_q(const Field& F, const SpMat& a, i64 q) {
    SpMat m(a.n);
    for (int i = 0; i < a.n; ++i)
        for (auto [j, v] : a.rows[static_cast<size_t>(i)])
            m.rows[static_cast<size_t>(i)].emplace_back(j, F.power_q(v, q));
    return m;
}

bool sp_is_monomial(const SpMat& a) {
    std::vector<bool> col(static_cast<size_t>(a.n), false);
    for (const auto& row : a.rows) {
        if (row.size() != 1) return false;
        if (col[static_cast<size_t>(row[0].first)]) return false;
        col[static_cast<size_t>(row[0].first)] = true;
    }
    return true;
}

SpMat sp_inverse(const Field& F, const SpMat& a) {
    if (sp_is_monomial(a)) {
        SpMat m(a.n);
        for (int i = 0; i < a.n; ++i) {
            auto [j, v] = a.rows[static_cast<size_t>(i)][0];
            m.set(j, i, F.inv(v));
        }
        return m;
    }
    // Sparse Gauss-Jordan; rows stay block-local for the tensor matrices here.
    std::vector<std::map<int, FF>> A(static_cast<size_t>(a.n)), Inv(static_cast<size_t>(a.n));
    for (int i = 0; i < a.n; ++i) {
        for (auto [j, v] : a.rows[static_cast<size_t>(i)]) A[static_cast<size_t>(i)][j] = v;
        Inv[static_cast<size_t>(i)][i] = F.one();
    }
    for (int col = 0; col < a.n; ++col) {
        int pivot = -1;
        for (int r = col; r < a.n; ++r)
            if (A[static_cast<size_t>(r)].count(col)) { pivot = r; break; }
        if (pivot < 0) throw invalid_argument("sp_inverse: singular matrix");
        std::swap(A[static_cast<size_t>(pivot)], A[static_cast<size_t>(col)]);
        std::swap(Inv[static_cast<size_t>(pivot)], Inv[static_cast<size_t>(col)]);
        FF d = F.inv(A[static_cast<size_t>(col)][col]);
        for (auto& [j, v] : A[static_cast<size_t>(col)]) v = F.mul(v, d);
        for (auto& [j, v] : Inv[static_cast<size_t>(col)]) v = F.mul(v, d);
        auto eliminate = [&F](std::map<int, FF>& row, const std::map<int, FF>& pivot_row, FF c) {
            for (const auto& [j, v] : pivot_row) {
                auto it = row.find(j);
                FF cur = (it == row.end()) ? FF_ZERO : it->second;
                FF t = F.sub(cur, F.mul(c, v));
                if (t == FF_ZERO) {
                    if (it != row.end()) row.erase(it);
                } else if (it != row.end()) {
                    it->second = t;
                } else {
                    row.emplace(j, t);
                }
            }
        };
        for (int r = 0; r < a.n; ++r) {
            if (r == col) continue;
            auto it = A[static_cast<size_t>(r)].find(col);
            if (it == A[static_cast<size_t>(r)].end()) continue;
            FF c = it->second;
            eliminate(A[static_cast<size_t>(r)], A[static_cast<size_t>(col)], c);
            eliminate(Inv[static_cast<size_t>(r)], Inv[static_cast<size_t>(col)], c);
        }
    }
    SpMat m(a.n);
    for (int i = 0; i < a.n; ++i)
        for (auto [j, v] : Inv[static_cast<size_t>(i)])
            if (v != FF_ZERO) m.rows[static_cast<size_t>(i)].emplace_back(j, v);
    return m;
}

FF sp_det_dense(const Field& F, const SpMat& a) {
    std::vector<std::map<int, FF>> A(static_cast<size_t>(a.n));
    for (int i = 0; i < a.n; ++i)
        for (auto [j, v] : a.rows[static_cast<size_t>(i)]) A[static_cast<size_t>(i)][j] = v;
    FF det = F.one();
    for (int col = 0; col < a.n; ++col) {
        int pivot = -1;
        for (int r = col; r < a.n; ++r)
            if (A[static_cast<size_t>(r)].count(col)) { pivot = r; break; }
        if (pivot < 0) return FF_ZERO;
        if (pivot != col) {
            std::swap(A[static_cast<size_t>(pivot)], A[static_cast<size_t>(col)]);
            det = F.neg(det);
        }
        FF piv = A[static_cast<size_t>(col)][col];
        det = F.mul(det, piv);
        FF d = F.inv(piv);
        for (int r = col + 1; r < a.n; ++r) {
            auto it = A[static_cast<size_t>(r)].find(col);
            if (it == A[static_cast<size_t>(r)].end()) continue;
            FF c = F.mul(it->second, d);
            for (const auto& [j, v] : A[static_cast<size_t>(col)]) {
                if (j < col) continue;
                auto rt = A[static_cast<size_t>(r)].find(j);
                FF cur = (rt == A[static_cast<size_t>(r)].end()) ? FF_ZERO : rt->second;
                FF t = F.sub(cur, F.mul(c, v));
                if (t == FF_ZERO) {
                    if (rt != A[static_cast<size_t>(r)].end()) A[static_cast<size_t>(r)].erase(rt);
                } else if (rt != A[static_cast<size_t>(r)].end()) {
                    rt->second = t;
                } else {
                    A[static_cast<size_t>(r)].emplace(j, t);
                }
            }
        }
    }
    return det;
}

Dense dense_mul(const Field& F, const Dense& a, const Dense& b) {
    Dense c(a.n, std::vector<FF>(static_cast<size_t>(a.n * a.n), FF_ZERO));
    for (int i = 0; i < a.n; ++i)
        for (int k = 0; k < a.n; ++k) {
            if (a.at(i, k) == FF_ZERO) continue;
            for (int j = 0; j < a.n; ++j)
                c.at(i, j) = F.add(c.at(i, j), F.mul(a.at(i, k), b.at(k, j)));
        }
    return c;
}

Dense dense_inverse(const Field& F, const Dense& a) {
    SpMat inv = sp_inverse(F, sp_from_dense(a));
    Dense d(a.n, std::vector<FF>(static_cast<size_t>(a.n * a.n), FF_ZERO));
    for (int i = 0; i < a.n; ++i)
        for (auto [j, v] : inv.rows[static_cast<size_t>(i)]) d.at(i, j) = v;
    return d;
}

FF dense_det(const Field& F, const Dense& a) { return sp_det_dense(F, sp_from_dense(a)); }

Dense dense_entrywise_q(const Field& F, const Dense& a, i64 q) {
    Dense d = a;
    for (auto& v : d.a) v = F.power_q(v, q);
    return d;
}

Dense dense_transpose(const Dense& a) {
    Dense d = a;
    for (int i = 0; i < a.n; ++i)
        for (int j = 0; j < a.n; ++j) d.at(i, j) = a.at(j, i);
    return d;
}

SpMat sp_block_diag(const Field& F, const std::vector<SpMat>& blocks) {
    (void)F;
    int total = 0;
    for (const auto& b : blocks) total += b.n;
    SpMat m(total);
    int off = 0;
    for (const auto& b : blocks) {
        for (int i = 0; i < b.n; ++i)
            for (auto [j, v] : b.rows[static_cast<size_t>(i)])
                m.rows[static_cast<size_t>(off + i)].emplace_back(off + j, v);
        off += b.n;
    }
    return m;
}

SpMat sp_perm(const Field& F, const std::vector<int>& perm) {
    SpMat m(static_cast<int>(perm.size()));
    for (size_t j = 0; j < perm.size(); ++j) m.set(perm[j], static_cast<int>(j), F.one());
    return m;
}

i64 sp_order(const Field& F, const SpMat& a, i64 cap) {
    SpMat id = sp_identity(F, a.n);
    SpMat cur = a;
    i64 ord = 1;
    while (!(cur == id)) {
        cur = sp_mul(F, cur, a);
        if (++ord > cap) throw cap_exceeded("sp_order: order exceeds cap");
    }
    return ord;
}

std::vector<SpMat> sp_closure(const Field& F, const std::vector<SpMat>& gens, i64 cap) {
    std::unordered_set<SpMat, SpMatHash> seen;
    std::deque<SpMat> queue;
    SpMat id = sp_identity(F, gens.empty() ? 1 : gens.front().n);
    seen.insert(id);
    queue.push_back(id);
    while (!queue.empty()) {
        SpMat cur = queue.front();
        queue.pop_front();
        for (const auto& g : gens) {
            SpMat next = sp_mul(F, cur, g);
            if (seen.insert(next).second) {
                if (static_cast<i64>(seen.size()) > cap)
                    throw cap_exceeded("sp_closure: cap exceeded");
                queue.push_back(next);
            }
        }
    }
    return {seen.begin(), seen.end()};
}

}  // namespace wl
