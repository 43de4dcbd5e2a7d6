#include "matgroups.hpp"

#include <algorithm>
#include <deque>
#include <map>

namespace wl {

namespace {

std::uint32_t pack(FF v) { return static_cast<std::uint32_t>(v + 1); }
FF unpack(std::uint32_t v) { return static_cast<FF>(v) - 1; }

}  // namespace

FF mat_get(const Mat& m, int i, int j) { return unpack(m.a[static_cast<size_t>(i * m.n + j)]); }

void mat_set(Mat& m, int i, int j, FF v) { m.a[static_cast<size_t>(i * m.n + j)] = pack(v); }

Mat mat_identity(const Field& F, int n) {
    Mat m(n, std::vector<std::uint32_t>(static_cast<size_t>(n * n), pack(FF_ZERO)));
    for (int i = 0; i < n; ++i) mat_set(m, i, i, F.one());
    return m;
}

Mat mat_mul(const Field& F, const Mat& x, const Mat& y) {
    int n = x.n;
    Mat z(n, std::vector<std::uint32_t>(static_cast<size_t>(n * n), pack(FF_ZERO)));
    for (int i = 0; i < n; ++i)
        for (int k = 0; k < n; ++k) {
            FF xik = mat_get(x, i, k);
            if (xik == FF_ZERO) continue;
            for (int j = 0; j < n; ++j) {
                FF ykj = mat_get(y, k, j);
                if (ykj == FF_ZERO) continue;
                mat_set(z, i, j, F.add(mat_get(z, i, j), F.mul(xik, ykj)));
            }
        }
    return z;
}

Mat mat_inverse(const Field& F, const Mat& x) {
    int n = x.n;
    Mat a = x;
    Mat inv = mat_identity(F, n);
    for (int col = 0; col < n; ++col) {
        int pivot = -1;
        for (int r = col; r < n; ++r)
            if (mat_get(a, r, col) != FF_ZERO) { pivot = r; break; }
        if (pivot < 0) throw invalid_argument("matrix not invertible");
        if (pivot != col)
            for (int j = 0; j < n; ++j) {
                FF t = mat_get(a, col, j);
                mat_set(a, col, j, mat_get(a, pivot, j));
                mat_set(a, pivot, j, t);
                t = mat_get(inv, col, j);
                mat_set(inv, col, j, mat_get(inv, pivot, j));
                mat_set(inv, pivot, j, t);
            }
        FF d = F.inv(mat_get(a, col, col));
        for (int j = 0; j < n; ++j) {
            mat_set(a, col, j, F.mul(mat_get(a, col, j), d));
            mat_set(inv, col, j, F.mul(mat_get(inv, col, j), d));
        }
        for (int r = 0; r < n; ++r) {
            if (r == col) continue;
            FF c = mat_get(a, r, col);
            if (c == FF_ZERO) continue;
            for (int j = 0; j < n; ++j) {
                mat_set(a, r, j, F.sub(mat_get(a, r, j), F.mul(c, mat_get(a, col, j))));
                mat_set(inv, r, j, F.sub(mat_get(inv, r, j), F.mul(c, mat_get(inv, col, j))));
            }
        }
    }
    return inv;
}

FF mat_det(const Field& F, const Mat& x) {
    int n = x.n;
    Mat a = x;
    FF det = F.one();
    for (int col = 0; col < n; ++col) {
        int pivot = -1;
        for (int r = col; r < n; ++r)
            if (mat_get(a, r, col) != FF_ZERO) { pivot = r; break; }
        if (pivot < 0) return FF_ZERO;
        if (pivot != col) {
            for (int j = 0; j < n; ++j) {
                FF t = mat_get(a, col, j);
                mat_set(a, col, j, mat_get(a, pivot, j));
                mat_set(a, pivot, j, t);
            }
            det = F.neg(det);
        }
        det = F.mul(det, mat_get(a, col, col));
        FF d = F.inv(mat_get(a, col, col));
        for (int r = col + 1; r < n; ++r) {
            FF c = F.mul(mat_get(a, r, col), d);
            if (c == FF_ZERO) continue;
            for (int j = col; j < n; ++j)
                mat_set(a, r, j, F.sub(mat_get(a, r, j), F.mul(c, mat_get(a, col, j))));
        }
    }
    return det;
}

Mat mat_power_q(const Field& F, const Mat& x, i64 q) {
    Mat y = x;
    for (auto& v : y.a) {
        FF e = unpack(v);
        v = pack(e == FF_ZERO ? FF_ZERO : F.power_q(e, q));
    }
    return y;
}

Mat mat_transpose(const Mat& x) {
    Mat y = x;
    for (int i = 0; i < x.n; ++i)
        for (int j = 0; j < x.n; ++j) mat_set(y, j, i, mat_get(x, i, j));
    return y;
}

bool FiniteMatrixGroup::contains(const Mat& m) const {
    return std::binary_search(elements.begin(), elements.end(), m);
}

FiniteMatrixGroup closure(FieldPtr F, int n, std::vector<Mat> gens, i64 cap) {
    FiniteMatrixGroup G;
    G.F = F;
    G.n = n;
    std::unordered_set<Mat, MatHash> seen;
    std::deque<Mat> queue;
    Mat id = mat_identity(*F, n);
    seen.insert(id);
    queue.push_back(id);
    for (auto& g : gens) {
        mat_inverse(*F, g);  // throws if a generator is singular
        if (seen.insert(g).second) queue.push_back(g);
    }
    G.gens = gens;
    while (!queue.empty()) {
        Mat cur = queue.front();
        queue.pop_front();
        for (const auto& g : gens) {
            Mat next = mat_mul(*F, cur, g);
            if (seen.insert(next).second) {
                if (static_cast<i64>(seen.size()) > cap)
                    throw cap_exceeded("group closure exceeds cap");
                queue.push_back(next);
            }
        }
    }
    G.elements.assign(seen.begin(), seen.end());
    std::sort(G.elements.begin(), G.elements.end());
    return G;
}

FiniteMatrixGroup subgroup_from(const FiniteMatrixGroup& G, std::vector<Mat> gens) {
    return closure(G.F, G.n, std::move(gens), G.order() + 1);
}

FiniteMatrixGroup gl_group(int n, i64 q, i64 cap) {
    auto [p, f] = prime_power_decompose(q);
    FieldPtr F = Field::make(p, f);
    std::vector<Mat> gens;
    Mat diag = mat_identity(*F, n);
    mat_set(diag, 0, 0, F->generator());
    gens.push_back(diag);
    if (n >= 2) {
        Mat cyc(n, std::vector<std::uint32_t>(static_cast<size_t>(n * n), pack(FF_ZERO)));
        for (int i = 0; i < n; ++i) mat_set(cyc, (i + 1) % n, i, F->one());
        gens.push_back(cyc);
        Mat trans = mat_identity(*F, n);
        mat_set(trans, 0, 1, F->one());
        gens.push_back(trans);
    }
    return closure(F, n, std::move(gens), cap);
}

FiniteMatrixGroup sl_group(int n, i64 q, i64 cap) { return det_one_subgroup(gl_group(n, q, cap)); }

FiniteMatrixGroup gu_group(int n, i64 q, i64 cap) {
    auto [p, f] = prime_power_decompose(q);
    FieldPtr F = Field::make(p, 2 * f);
    i64 cells = 1;
    for (int i = 0; i < n * n; ++i) {
        cells *= F->size();
        if (cells > (1 << 24)) throw cap_exceeded("unitary group scan too large");
    }
    std::vector<Mat> elems;
    Mat id = mat_identity(*F, n);
    std::vector<FF> entry(static_cast<size_t>(n * n), FF_ZERO);
    auto rec = [&](auto&& self, int pos) -> void {
        if (pos == n * n) {
            Mat m(n, {});
            m.a.resize(static_cast<size_t>(n * n));
            for (int i = 0; i < n * n; ++i) m.a[static_cast<size_t>(i)] = pack(entry[static_cast<size_t>(i)]);
            Mat conj = mat_power_q(*F, m, q);
            if (mat_mul(*F, mat_transpose(conj), m) == id) elems.push_back(std::move(m));
            return;
        }
        entry[static_cast<size_t>(pos)] = FF_ZERO;
        self(self, pos + 1);
        for (i64 lg = 0; lg < F->unit_order(); ++lg) {
            entry[static_cast<size_t>(pos)] = lg;
            self(self, pos + 1);
        }
    };
    rec(rec, 0);
    if (static_cast<i64>(elems.size()) > cap) throw cap_exceeded("unitary group exceeds cap");
    FiniteMatrixGroup G;
    G.F = F;
    G.n = n;
    std::sort(elems.begin(), elems.end());
    G.elements = std::move(elems);
    G.gens = G.elements;  // explicit list; generators unused downstream
    return G;
}

FiniteMatrixGroup su_group(int n, i64 q, i64 cap) { return det_one_subgroup(gu_group(n, q, cap)); }

FiniteMatrixGroup det_one_subgroup(const FiniteMatrixGroup& H) {
    FiniteMatrixGroup G;
    G.F = H.F;
    G.n = H.n;
    for (const auto& m : H.elements)
        if (mat_det(*H.F, m) == H.F->one()) G.elements.push_back(m);
    G.gens = G.elements;
    return G;
}

i64 element_order(const Field& F, const Mat& x) {
    Mat id = mat_identity(F, x.n);
    Mat cur = x;
    i64 ord = 1;
    while (!(cur == id)) {
        cur = mat_mul(F, cur, x);
        ++ord;
    }
    return ord;
}

ConjClassTable conjugacy_classes(const FiniteMatrixGroup& G) {
    const Field& F = *G.F;
    std::vector<Mat> conjugators = G.gens.empty() ? G.elements : G.gens;
    std::vector<std::pair<Mat, Mat>> conj_pairs;  // (g, g^-1)
    conj_pairs.reserve(conjugators.size());
    for (const auto& g : conjugators) conj_pairs.emplace_back(g, mat_inverse(F, g));

    ConjClassTable table;
    std::unordered_set<Mat, MatHash> assigned;
    for (const auto& x : G.elements) {
        if (assigned.count(x)) continue;
        std::deque<Mat> queue{x};
        std::unordered_set<Mat, MatHash> orbit{x};
        while (!queue.empty()) {
            Mat cur = queue.front();
            queue.pop_front();
            for (const auto& [g, ginv] : conj_pairs) {
                Mat y = mat_mul(F, mat_mul(F, g, cur), ginv);
                if (orbit.insert(y).second) queue.push_back(y);
            }
        }
        Mat rep = *std::min_element(orbit.begin(), orbit.end());
        table.classes.push_back({rep, static_cast<i64>(orbit.size()), element_order(F, rep)});
        for (const auto& y : orbit) assigned.insert(y);
    }
    std::sort(table.classes.begin(), table.classes.end(),
              [](const ConjClass& a, const ConjClass& b) { return a.rep < b.rep; });
    return table;
}

i64 ell_regular_class_count(const FiniteMatrixGroup& G, i64 ell) {
    i64 count = 0;
    for (const auto& c : conjugacy_classes(G).classes)
        if (c.element_order % ell != 0) ++count;
    return count;
}

FiniteMatrixGroup normalizer(const FiniteMatrixGroup& G, const FiniteMatrixGroup& H) {
    const Field& F = *G.F;
    FiniteMatrixGroup N;
    N.F = G.F;
    N.n = G.n;
    std::vector<Mat> hgens = H.gens.empty() ? H.elements : H.gens;
    for (const auto& g : G.elements) {
        Mat ginv = mat_inverse(F, g);
        bool ok = true;
        for (const auto& h : hgens)
            if (!H.contains(mat_mul(F, mat_mul(F, g, h), ginv))) { ok = false; break; }
        if (ok) N.elements.push_back(g);
    }
    N.gens = N.elements;
    return N;
}

FiniteMatrixGroup centralizer(const FiniteMatrixGroup& G, const FiniteMatrixGroup& H) {
    const Field& F = *G.F;
    FiniteMatrixGroup C;
    C.F = G.F;
    C.n = G.n;
    std::vector<Mat> hgens = H.gens.empty() ? H.elements : H.gens;
    for (const auto& g : G.elements) {
        bool ok = true;
        for (const auto& h : hgens)
            if (!(mat_mul(F, g, h) == mat_mul(F, h, g))) { ok = false; break; }
        if (ok) C.elements.push_back(g);
    }
    C.gens = C.elements;
    return C;
}

FiniteMatrixGroup sylow(const FiniteMatrixGroup& G, i64 ell) {
    const Field& F = *G.F;
    unsigned target = valuation(G.order(), ell);
    FiniteMatrixGroup P;
    P.F = G.F;
    P.n = G.n;
    P.elements = {mat_identity(F, G.n)};
    P.gens = P.elements;
    while (valuation(P.order(), ell) < target) {
        FiniteMatrixGroup N = normalizer(G, P);
        bool extended = false;
        for (const auto& x : N.elements) {
            i64 odd = ell_prime_part(element_order(F, x), ell);
            Mat y = x;
            for (i64 i = 1; i < odd; ++i) y = mat_mul(F, y, x);  // ell-part of x
            if (P.contains(y)) continue;
            std::vector<Mat> gens = P.gens;
            gens.push_back(y);
            FiniteMatrixGroup bigger = closure(G.F, G.n, gens, G.order() + 1);
            if (ell_prime_part(bigger.order(), ell) == 1) {
                P = std::move(bigger);
                extended = true;
                break;
            }
        }
        if (!extended)
            throw std::logic_error("sylow: failed to extend an ell-subgroup");
    }
    return P;
}

FiniteMatrixGroup o_ell(const FiniteMatrixGroup& G, i64 ell) {
    const Field& F = *G.F;
    FiniteMatrixGroup S = sylow(G, ell);
    std::vector<Mat> live = S.elements;
    for (const auto& g : G.elements) {
        Mat ginv = mat_inverse(F, g);
        std::vector<Mat> keep;
        keep.reserve(live.size());
        for (const auto& x : live)
            if (S.contains(mat_mul(F, mat_mul(F, ginv, x), g))) keep.push_back(x);
        live = std::move(keep);
        if (live.size() == 1) break;
    }
    FiniteMatrixGroup O;
    O.F = G.F;
    O.n = G.n;
    O.elements = std::move(live);
    O.gens = O.elements;
    return O;
}

std::vector<FiniteMatrixGroup> all_subgroups(const FiniteMatrixGroup& S) {
    std::vector<FiniteMatrixGroup> found;
    std::map<std::vector<Mat>, size_t> seen;
    FiniteMatrixGroup triv;
    triv.F = S.F;
    triv.n = S.n;
    triv.elements = {mat_identity(*S.F, S.n)};
    triv.gens = triv.elements;
    found.push_back(triv);
    seen[triv.elements] = 0;
    size_t head = 0;
    while (head < found.size()) {
        FiniteMatrixGroup cur = found[head++];
        for (const auto& x : S.elements) {
            if (cur.contains(x)) continue;
            std::vector<Mat> gens = cur.gens;
            gens.push_back(x);
            FiniteMatrixGroup bigger = closure(S.F, S.n, gens, S.order() + 1);
            if (!seen.count(bigger.elements)) {
                seen[bigger.elements] = found.size();
                found.push_back(std::move(bigger));
            }
        }
    }
    return found;
}

bool are_conjugate(const FiniteMatrixGroup& G, const FiniteMatrixGroup& A,
                   const FiniteMatrixGroup& B) {
    if (A.order() != B.order()) return false;
    const Field& F = *G.F;
    for (const auto& g : G.elements) {
        Mat ginv = mat_inverse(F, g);
        bool ok = true;
        for (const auto& a : A.gens.empty() ? A.elements : A.gens)
            if (!B.contains(mat_mul(F, mat_mul(F, g, a), ginv))) { ok = false; break; }
        if (ok) return true;
    }
    return false;
}

std::vector<FiniteMatrixGroup> radical_subgroups(const FiniteMatrixGroup& G, i64 ell,
                                                 i64 sylow_cap) {
    FiniteMatrixGroup S = sylow(G, ell);
    if (S.order() > sylow_cap) throw cap_exceeded("Sylow subgroup too large for radical scan");
    std::vector<FiniteMatrixGroup> radicals;
    for (auto& R : all_subgroups(S)) {
        FiniteMatrixGroup N = normalizer(G, R);
        FiniteMatrixGroup O = o_ell(N, ell);
        if (O.elements == R.elements) radicals.push_back(std::move(R));
    }
    // Deduplicate under G-conjugacy.
    std::vector<FiniteMatrixGroup> reps;
    for (auto& R : radicals) {
        bool dup = false;
        for (const auto& seen : reps)
            if (are_conjugate(G, seen, R)) { dup = true; break; }
        if (!dup) reps.push_back(std::move(R));
    }
    std::sort(reps.begin(), reps.end(), [](const FiniteMatrixGroup& a, const FiniteMatrixGroup& b) {
        if (a.order() != b.order()) return a.order() < b.order();
        return a.elements < b.elements;
    });
    return reps;
}

}  // namespace wl
