#pragma once

#include <memory>
#include <vector>

#include "arith.hpp"

namespace wl {

// Field element handle: -1 encodes zero, otherwise the discrete log base the
// fixed generator, in [0, p^k - 2].
using FF = i64;
inline constexpr FF FF_ZERO = -1;

// GF(p^k) with the lexicographically smallest monic irreducible modulus and
// the smallest primitive element; multiplication on discrete logs, addition
// through a Zech logarithm table.
class Field {
  public:
    static std::shared_ptr<const Field> make(i64 p, unsigned k);

    i64 p() const { return p_; }
    unsigned k() const { return k_; }
    i64 size() const { return size_; }         // p^k
    i64 unit_order() const { return size_ - 1; }
    const std::vector<i64>& modulus() const { return modulus_; }  // coeffs, degree k monic
    FF generator() const { return 1 % unit_order(); }

    FF zero() const { return FF_ZERO; }
    FF one() const { return 0; }

    FF from_int(i64 c) const;  // image of the integer c (prime subfield)
    // Coefficient vector (length k, constant term first) <-> element.
    std::vector<i64> coeffs(FF x) const;
    FF from_coeffs(const std::vector<i64>& c) const;
    // Canonical integer id: sum coeffs[i] p^i; used for deterministic choices.
    i64 canonical_id(FF x) const;

    FF neg(FF x) const;
    FF add(FF x, FF y) const;
    FF sub(FF x, FF y) const { return add(x, neg(y)); }
    FF mul(FF x, FF y) const {
        if (x == FF_ZERO || y == FF_ZERO) return FF_ZERO;
        return (x + y) % unit_order();
    }
    FF inv(FF x) const {
        if (x == FF_ZERO) throw invalid_argument("division by zero");
        return (unit_order() - x) % unit_order();
    }
    FF pow(FF x, i64 e) const;

    // x -> x^(p^j), the j-th Frobenius power.
    FF frobenius_power(FF x, unsigned j) const;
    // x -> x^q for q a power of p inside the field tower.
    FF power_q(FF x, i64 q) const;

    i64 element_order(FF x) const;
    // Element of exact multiplicative order d (d | p^k - 1).
    FF element_of_order(i64 d) const;
    bool is_square(FF x) const;
    // Square root, deterministic: the one with the smaller canonical id.
    FF sqrt(FF x) const;

  private:
    Field() = default;
    i64 p_ = 0;
    unsigned k_ = 0;
    i64 size_ = 0;
    std::vector<i64> modulus_;
    std::vector<i64> zech_;     // zech_[d] = log(1 + g^d), or -1 when 1 + g^d = 0
    std::vector<i64> log_;      // canonical id -> log (id 0 unused)
    std::vector<i64> exp_id_;   // log -> canonical id
    i64 minus_one_log_ = 0;     // log(-1)
};

using FieldPtr = std::shared_ptr<const Field>;

// Smallest field GF(p^k) containing elements of every requested multiplicative
// order; optionally doubled once so that given elements admit square roots.
FieldPtr field_with_orders(i64 p, const std::vector<i64>& orders);

}  // namespace wl
