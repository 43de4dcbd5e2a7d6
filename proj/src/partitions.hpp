#pragma once

#include <compare>
#include <map>
#include <vector>

#include "arith.hpp"

namespace wl {

// Integer partition: weakly decreasing positive parts; empty = partition of 0.
struct Partition {
    std::vector<int> parts;

    Partition() = default;
    explicit Partition(std::vector<int> p) : parts(std::move(p)) {
        for (size_t i = 0; i < parts.size(); ++i) {
            if (parts[i] <= 0) throw invalid_argument("partition parts must be positive");
            if (i > 0 && parts[i] > parts[i - 1])
                throw invalid_argument("partition parts must be weakly decreasing");
        }
    }

    int size() const {
        int s = 0;
        for (int p : parts) s += p;
        return s;
    }
    bool empty() const { return parts.empty(); }

    friend bool operator==(const Partition&, const Partition&) = default;
    // Ascending lexicographic on part vectors; used only as an arbitrary
    // total order for maps and canonical sorting.
    friend auto operator<=>(const Partition& x, const Partition& y) {
        return x.parts <=> y.parts;
    }
};

// Descending-lexicographic order on part vectors: (4) before (3,1) before (2,2).
struct PartitionDescLex {
    bool operator()(const Partition& x, const Partition& y) const {
        return std::lexicographical_compare(y.parts.begin(), y.parts.end(),
                                            x.parts.begin(), x.parts.end());
    }
};

Partition transpose(const Partition& mu);

// gcd of the parts (0 for the empty partition).
int delta_gcd(const Partition& mu);

std::vector<int> hook_lengths(const Partition& mu);

bool has_d_hook(const Partition& mu, int d);

Partition d_core(const Partition& mu, int d);
std::vector<Partition> d_quotient(const Partition& mu, int d);

// Inverse of (d_core, d_quotient); the convention is frozen by golden tests.
Partition from_core_and_quotient(const Partition& core, const std::vector<Partition>& quot,
                                 int d);

std::vector<Partition> partitions_of(int m);

// Finitely supported assignment (delta, j) -> ell-core, 1 <= j <= ell^delta,
// with weight sum ell^delta * |f(delta, j)| = m.
struct CoreTower {
    i64 ell = 2;
    // key (delta, j); values are nonempty ell-cores.
    std::map<std::pair<unsigned, i64>, Partition> entries;

    int weight() const {
        i64 w = 0;
        for (const auto& [key, lam] : entries) w += ipow(ell, key.first) * lam.size();
        return static_cast<int>(w);
    }
    bool empty() const { return entries.size() == 0; }

    friend bool operator==(const CoreTower&, const CoreTower&) = default;
    friend auto operator<=>(const CoreTower&, const CoreTower&) = default;
};

// Stratum index of the slot (delta, j): the gamma with
// ell^{delta-gamma-1} < j <= ell^{delta-gamma}.
unsigned slot_stratum(i64 ell, unsigned delta, i64 j);

inline constexpr unsigned kDegInfinity = 0xffffffffu;

// deg(f): minimal stratum index over nonempty entries; kDegInfinity when empty.
unsigned tower_degree(const CoreTower& f);

CoreTower core_tower(const Partition& mu, i64 ell);
Partition tower_to_partition(const CoreTower& f);

// All partitions of m grouped by the stratum gamma = v_ell(Delta(mu')).
std::map<unsigned, std::vector<Partition>> strata_U(int m, i64 ell);
// All weight-m towers grouped by deg.
std::map<unsigned, std::vector<CoreTower>> strata_D(int m, i64 ell);

std::vector<CoreTower> towers_of_weight(int m, i64 ell);

// Stratum-preserving bijection U_m -> D_m: within each stratum, both sides are
// sorted canonically (partitions descending-lex; towers by slot traversal) and
// paired by rank.
CoreTower pi_m(const Partition& mu, i64 ell);
Partition pi_m_inv(const CoreTower& f);

// Canonical total order on towers used by pi_m.
bool tower_before(const CoreTower& f, const CoreTower& g);

}  // namespace wl
