#include "partitions.hpp"

#include <algorithm>

namespace wl {

Partition transpose(const Partition& mu) {
    std::vector<int> t;
    if (mu.parts.empty()) return Partition{};
    t.resize(static_cast<size_t>(mu.parts.front()), 0);
    for (int p : mu.parts)
        for (int j = 0; j < p; ++j) ++t[static_cast<size_t>(j)];
    return Partition(std::move(t));
}

int delta_gcd(const Partition& mu) {
    i64 g = 0;
    for (int p : mu.parts) g = gcd_i64(g, p);
    return static_cast<int>(g);
}

std::vector<int> hook_lengths(const Partition& mu) {
    std::vector<int> out;
    Partition t = transpose(mu);
    for (size_t i = 0; i < mu.parts.size(); ++i)
        for (int j = 0; j < mu.parts[i]; ++j) {
            int arm = mu.parts[i] - j - 1;
            int leg = t.parts[static_cast<size_t>(j)] - static_cast<int>(i) - 1;
            out.push_back(arm + leg + 1);
        }
    std::sort(out.rbegin(), out.rend());
    return out;
}

namespace {

// Beta-set of length t (a multiple of d at the call sites): mu_i + t - i.
std::vector<i64> beta_set(const Partition& mu, int t) {
    std::vector<i64> beta;
    beta.reserve(static_cast<size_t>(t));
    for (int i = 1; i <= t; ++i) {
        int part = (i <= static_cast<int>(mu.parts.size())) ? mu.parts[static_cast<size_t>(i - 1)] : 0;
        beta.push_back(part + t - i);
    }
    return beta;
}

Partition beta_to_partition(std::vector<i64> beta) {
    std::sort(beta.rbegin(), beta.rend());
    int t = static_cast<int>(beta.size());
    std::vector<int> parts;
    for (int i = 1; i <= t; ++i) {
        i64 p = beta[static_cast<size_t>(i - 1)] - (t - i);
        if (p < 0) throw invalid_argument("invalid beta set");
        if (p > 0) parts.push_back(static_cast<int>(p));
    }
    return Partition(std::move(parts));
}

int quotient_beta_length(const Partition& mu, int d) {
    int k = static_cast<int>(mu.parts.size());
    return ((k + d - 1) / d + 1) * d;  // multiple of d, strictly above #parts
}

}  // namespace

bool has_d_hook(const Partition& mu, int d) {
    for (int h : hook_lengths(mu))
        if (h % d == 0) return true;
    return false;
}

Partition d_core(const Partition& mu, int d) {
    if (d <= 0) throw invalid_argument("d_core: d must be positive");
    int t = quotient_beta_length(mu, d);
    auto beta = beta_set(mu, t);
    std::vector<int> count(static_cast<size_t>(d), 0);
    for (i64 b : beta) ++count[static_cast<size_t>(b % d)];
    std::vector<i64> core_beta;
    for (int r = 0; r < d; ++r)
        for (int i = 0; i < count[static_cast<size_t>(r)]; ++i) core_beta.push_back(static_cast<i64>(i) * d + r);
    return beta_to_partition(std::move(core_beta));
}

std::vector<Partition> d_quotient(const Partition& mu, int d) {
    if (d <= 0) throw invalid_argument("d_quotient: d must be positive");
    int t = quotient_beta_length(mu, d);
    auto beta = beta_set(mu, t);
    std::vector<std::vector<i64>> runners(static_cast<size_t>(d));
    for (i64 b : beta) runners[static_cast<size_t>(b % d)].push_back(b / d);
    std::vector<Partition> quot;
    quot.reserve(static_cast<size_t>(d));
    for (int r = 0; r < d; ++r) quot.push_back(beta_to_partition(std::move(runners[static_cast<size_t>(r)])));
    return quot;
}

Partition from_core_and_quotient(const Partition& core, const std::vector<Partition>& quot,
                                 int d) {
    if (d <= 0 || static_cast<int>(quot.size()) != d)
        throw invalid_argument("from_core_and_quotient: need exactly d quotient components");
    int guard = core.size() + 1;
    for (const auto& q : quot) guard += static_cast<int>(q.parts.size()) + q.size();
    int t = quotient_beta_length(core, d);
    while (t < d * guard) t += d;
    auto cbeta = beta_set(core, t);
    std::vector<int> count(static_cast<size_t>(d), 0);
    for (i64 b : cbeta) ++count[static_cast<size_t>(b % d)];
    std::vector<i64> beta;
    for (int r = 0; r < d; ++r) {
        int s = count[static_cast<size_t>(r)];
        if (s < static_cast<int>(quot[static_cast<size_t>(r)].parts.size()))
            throw invalid_argument("from_core_and_quotient: beta length underflow");
        for (int i = 1; i <= s; ++i) {
            int part = (i <= static_cast<int>(quot[static_cast<size_t>(r)].parts.size()))
                           ? quot[static_cast<size_t>(r)].parts[static_cast<size_t>(i - 1)]
                           : 0;
            beta.push_back(static_cast<i64>(part + s - i) * d + r);
        }
    }
    return beta_to_partition(std::move(beta));
}

std::vector<Partition> partitions_of(int m) {
    std::vector<Partition> out;
    std::vector<int> cur;
    auto rec = [&](auto&& self, int remaining, int maxpart) -> void {
        if (remaining == 0) {
            out.emplace_back(cur);
            return;
        }
        for (int p = std::min(remaining, maxpart); p >= 1; --p) {
            cur.push_back(p);
            self(self, remaining - p, p);
            cur.pop_back();
        }
    };
    rec(rec, m, m == 0 ? 1 : m);
    std::sort(out.begin(), out.end(), PartitionDescLex{});
    return out;
}

unsigned slot_stratum(i64 ell, unsigned delta, i64 j) {
    if (j < 1 || j > ipow(ell, delta)) throw invalid_argument("slot index out of range");
    unsigned k = 0;
    while (ipow(ell, k) < j) ++k;  // minimal k with j <= ell^k
    return delta - k;
}

unsigned tower_degree(const CoreTower& f) {
    unsigned deg = kDegInfinity;
    for (const auto& [key, lam] : f.entries)
        deg = std::min(deg, slot_stratum(f.ell, key.first, key.second));
    return deg;
}

CoreTower core_tower(const Partition& mu, i64 ell) {
    if (!is_prime(ell)) throw invalid_argument("core_tower: ell must be prime");
    CoreTower f;
    f.ell = ell;
    // Level-by-level core/quotient recursion; mus holds mu^delta_j for j = 1..ell^delta.
    std::vector<Partition> mus{mu};
    unsigned delta = 0;
    while (true) {
        bool all_empty = true;
        std::vector<Partition> next;
        next.reserve(mus.size() * static_cast<size_t>(ell));
        for (size_t j = 0; j < mus.size(); ++j) {
            const Partition& m = mus[j];
            if (!m.empty()) all_empty = false;
            Partition core = d_core(m, static_cast<int>(ell));
            if (!core.empty()) f.entries[{delta, static_cast<i64>(j + 1)}] = core;
            for (auto& q : d_quotient(m, static_cast<int>(ell))) next.push_back(std::move(q));
        }
        if (all_empty) break;
        mus = std::move(next);
        ++delta;
    }
    return f;
}

Partition tower_to_partition(const CoreTower& f) {
    unsigned depth = 0;
    for (const auto& [key, lam] : f.entries) depth = std::max(depth, key.first);
    i64 ell = f.ell;
    auto entry = [&](unsigned delta, i64 j) -> Partition {
        auto it = f.entries.find({delta, j});
        return it == f.entries.end() ? Partition{} : it->second;
    };
    // Rebuild from the deepest level upward.
    std::vector<Partition> mus(static_cast<size_t>(ipow(ell, depth)));
    for (i64 j = 1; j <= static_cast<i64>(mus.size()); ++j)
        mus[static_cast<size_t>(j - 1)] = entry(depth, j);
    for (int delta = static_cast<int>(depth) - 1; delta >= 0; --delta) {
        std::vector<Partition> up(static_cast<size_t>(ipow(ell, static_cast<unsigned>(delta))));
        for (i64 j = 1; j <= static_cast<i64>(up.size()); ++j) {
            std::vector<Partition> quot(mus.begin() + (j - 1) * ell, mus.begin() + j * ell);
            up[static_cast<size_t>(j - 1)] =
                from_core_and_quotient(entry(static_cast<unsigned>(delta), j), quot,
                                       static_cast<int>(ell));
        }
        mus = std::move(up);
    }
    return mus.front();
}

std::map<unsigned, std::vector<Partition>> strata_U(int m, i64 ell) {
    std::map<unsigned, std::vector<Partition>> out;
    for (auto& mu : partitions_of(m)) {
        unsigned gamma = mu.empty() ? kDegInfinity
                                    : valuation(delta_gcd(transpose(mu)), ell);
        out[gamma].push_back(std::move(mu));
    }
    return out;
}

std::vector<CoreTower> towers_of_weight(int m, i64 ell) {
    // Enumerate slots in traversal order with a running weight budget.
    std::vector<std::pair<unsigned, i64>> slots;
    for (unsigned delta = 0; ipow(ell, delta) <= m || delta == 0; ++delta)
        for (i64 j = 1; j <= ipow(ell, delta); ++j) slots.emplace_back(delta, j);
    std::vector<std::vector<Partition>> cores_by_size(static_cast<size_t>(m) + 1);
    for (int s = 0; s <= m; ++s)
        for (auto& mu : partitions_of(s))
            if (s == 0 || !has_d_hook(mu, static_cast<int>(ell)))
                cores_by_size[static_cast<size_t>(s)].push_back(std::move(mu));
    std::vector<CoreTower> out;
    CoreTower cur;
    cur.ell = ell;
    auto rec = [&](auto&& self, size_t slot, int remaining) -> void {
        if (remaining == 0) {
            out.push_back(cur);
            return;
        }
        if (slot >= slots.size()) return;
        i64 unit = ipow(ell, slots[slot].first);
        if (unit > remaining) {
            // No later slot can carry weight either only if all units exceed;
            // units are nondecreasing along the traversal within a level but
            // jump at level boundaries, so simply advance.
        }
        for (int s = 0; static_cast<i64>(s) * unit <= remaining; ++s) {
            if (s == 0) {
                self(self, slot + 1, remaining);
            } else {
                for (const auto& core : cores_by_size[static_cast<size_t>(s)]) {
                    cur.entries[slots[slot]] = core;
                    self(self, slot + 1, remaining - static_cast<int>(unit) * s);
                }
                cur.entries.erase(slots[slot]);
            }
        }
    };
    if (m == 0)
        out.push_back(cur);
    else
        rec(rec, 0, m);
    return out;
}

std::map<unsigned, std::vector<CoreTower>> strata_D(int m, i64 ell) {
    std::map<unsigned, std::vector<CoreTower>> out;
    for (auto& f : towers_of_weight(m, ell)) out[tower_degree(f)].push_back(std::move(f));
    for (auto& [gamma, towers] : out)
        std::sort(towers.begin(), towers.end(), tower_before);
    return out;
}

bool tower_before(const CoreTower& f, const CoreTower& g) {
    unsigned depth = 0;
    for (const auto& [key, lam] : f.entries) depth = std::max(depth, key.first);
    for (const auto& [key, lam] : g.entries) depth = std::max(depth, key.first);
    auto entry = [](const CoreTower& t, unsigned delta, i64 j) -> const Partition* {
        static const Partition kEmpty{};
        auto it = t.entries.find({delta, j});
        return it == t.entries.end() ? &kEmpty : &it->second;
    };
    PartitionDescLex less;
    for (unsigned delta = 0; delta <= depth; ++delta)
        for (i64 j = 1; j <= ipow(f.ell, delta); ++j) {
            const Partition* a = entry(f, delta, j);
            const Partition* b = entry(g, delta, j);
            if (*a != *b) return less(*a, *b);
        }
    return false;
}

CoreTower pi_m(const Partition& mu, i64 ell) {
    int m = mu.size();
    unsigned gamma = mu.empty() ? kDegInfinity : valuation(delta_gcd(transpose(mu)), ell);
    auto us = strata_U(m, ell);
    auto ds = strata_D(m, ell);
    auto& ustr = us.at(gamma);
    auto& dstr = ds.at(gamma);
    if (ustr.size() != dstr.size())
        throw std::logic_error("pi_m: stratum size mismatch");
    std::sort(ustr.begin(), ustr.end(), PartitionDescLex{});
    auto it = std::find(ustr.begin(), ustr.end(), mu);
    return dstr[static_cast<size_t>(it - ustr.begin())];
}

Partition pi_m_inv(const CoreTower& f) {
    int m = f.weight();
    unsigned gamma = tower_degree(f);
    auto us = strata_U(m, f.ell);
    auto ds = strata_D(m, f.ell);
    auto& ustr = us.at(gamma);
    auto& dstr = ds.at(gamma);
    std::sort(ustr.begin(), ustr.end(), PartitionDescLex{});
    auto it = std::find(dstr.begin(), dstr.end(), f);
    if (it == dstr.end()) throw std::logic_error("pi_m_inv: tower not found in its stratum");
    return ustr[static_cast<size_t>(it - dstr.begin())];
}

}  // namespace wl
