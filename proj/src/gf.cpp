#include "gf.hpp"

#include <algorithm>
#include <map>

namespace wl {

namespace {

// Dense polynomial arithmetic over GF(p), used only to bootstrap the tables.
using Poly = std::vector<i64>;  // coeffs, constant first, no trailing zeros

Poly trim(Poly a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
    return a;
}

Poly poly_mul_mod(const Poly& a, const Poly& b, const Poly& mod, i64 p) {
    std::vector<i64> c(a.size() + b.size(), 0);
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j) c[i + j] = (c[i + j] + a[i] * b[j]) % p;
    // reduce mod the monic modulus
    size_t k = mod.size() - 1;
    for (size_t i = c.size(); i-- > k;) {
        i64 coef = c[i] % p;
        if (coef == 0) continue;
        for (size_t j = 0; j < k; ++j)
            c[i - k + j] = mod_pos(c[i - k + j] - coef * mod[j], p);
        c[i] = 0;
    }
    c.resize(k);
    return trim(c);
}

Poly poly_pow_mod(Poly base, i64 e, const Poly& mod, i64 p) {
    Poly r{1};
    while (e) {
        if (e & 1) r = poly_mul_mod(r, base, mod, p);
        base = poly_mul_mod(base, base, mod, p);
        e >>= 1;
    }
    return r;
}

bool is_irreducible(const Poly& f, i64 p) {
    unsigned k = static_cast<unsigned>(f.size() - 1);
    Poly x{0, 1};
    // x^(p^k) == x mod f, and x^(p^(k/r)) - x coprime to f for prime r | k.
    Poly xp = x;
    for (unsigned i = 0; i < k; ++i) xp = poly_pow_mod(xp, p, f, p);
    Poly diff = xp;
    diff.resize(std::max<size_t>(diff.size(), 2), 0);
    diff[1] = mod_pos(diff[1] - 1, p);
    if (!trim(diff).empty()) return false;
    for (auto [r, e] : factorize(static_cast<i64>(k))) {
        Poly y = x;
        for (unsigned i = 0; i < k / static_cast<unsigned>(r); ++i) y = poly_pow_mod(y, p, f, p);
        Poly d = y;
        d.resize(std::max<size_t>(d.size(), 2), 0);
        d[1] = mod_pos(d[1] - 1, p);
        d = trim(d);
        // gcd(d, f) must be 1
        Poly a = f, b = d;
        while (!b.empty()) {
            // a mod b
            Poly rem = a;
            i64 lead_inv = pow_mod(b.back(), p - 2, p);
            while (rem.size() >= b.size() && !rem.empty()) {
                i64 coef = rem.back() * lead_inv % p;
                size_t shift = rem.size() - b.size();
                for (size_t i = 0; i < b.size(); ++i)
                    rem[shift + i] = mod_pos(rem[shift + i] - coef * b[i], p);
                rem = trim(rem);
            }
            a = b;
            b = rem;
        }
        if (a.size() != 1) return false;
    }
    return true;
}

i64 poly_to_id(const Poly& a, i64 p, unsigned k) {
    i64 id = 0;
    for (unsigned i = k; i-- > 0;) id = id * p + (i < a.size() ? a[i] : 0);
    return id;
}

}  // namespace

std::shared_ptr<const Field> Field::make(i64 p, unsigned k) {
    if (!is_prime(p)) throw invalid_argument("field characteristic must be prime");
    if (k < 1) throw invalid_argument("field degree must be positive");
    auto f = std::shared_ptr<Field>(new Field());
    f->p_ = p;
    f->k_ = k;
    f->size_ = ipow(p, k);
    if (f->size_ > (1 << 22))
        throw cap_exceeded("field too large for table-based arithmetic");

    // Lexicographically smallest monic irreducible modulus: scan constant-first
    // coefficient tuples by their base-p integer value.
    Poly mod;
    if (k == 1) {
        mod = {0, 1};  // x
    } else {
        for (i64 c = 0; c < f->size_; ++c) {
            Poly cand(k + 1, 0);
            i64 t = c;
            for (unsigned i = 0; i < k; ++i) { cand[i] = t % p; t /= p; }
            cand[k] = 1;
            if (is_irreducible(cand, p)) { mod = cand; break; }
        }
    }
    if (mod.empty()) throw std::logic_error("no irreducible modulus found");
    f->modulus_ = mod;

    // Smallest primitive element by canonical id.
    i64 order = f->size_ - 1;
    auto order_factors = factorize(order);
    Poly gen;
    for (i64 c = 1; c < f->size_; ++c) {
        Poly cand;
        i64 t = c;
        for (unsigned i = 0; i < k; ++i) { cand.push_back(t % p); t /= p; }
        cand = trim(cand);
        bool primitive = true;
        for (auto [r, e] : order_factors) {
            if (poly_pow_mod(cand, order / r, mod, p) == Poly{1}) { primitive = false; break; }
        }
        if (primitive) { gen = cand; break; }
    }
    if (gen.empty()) throw std::logic_error("no primitive element found");

    // Discrete log / exp tables and the Zech table.
    f->log_.assign(static_cast<size_t>(f->size_), -2);
    f->exp_id_.assign(static_cast<size_t>(order), 0);
    Poly cur{1};
    for (i64 d = 0; d < order; ++d) {
        i64 id = poly_to_id(cur, p, k);
        f->exp_id_[static_cast<size_t>(d)] = id;
        f->log_[static_cast<size_t>(id)] = d;
        cur = poly_mul_mod(cur, gen, mod, p);
    }
    f->zech_.assign(static_cast<size_t>(order), -1);
    for (i64 d = 0; d < order; ++d) {
        // 1 + g^d: add 1 to the constant coefficient of g^d.
        i64 id = f->exp_id_[static_cast<size_t>(d)];
        i64 c0 = id % p;
        i64 id1 = id - c0 + (c0 + 1) % p;
        f->zech_[static_cast<size_t>(d)] = (id1 == 0) ? -1 : f->log_[static_cast<size_t>(id1)];
    }
    f->minus_one_log_ = (p == 2) ? 0 : order / 2;
    return f;
}

FF Field::from_int(i64 c) const {
    c = mod_pos(c, p_);
    if (c == 0) return FF_ZERO;
    return log_[static_cast<size_t>(c)];
}

std::vector<i64> Field::coeffs(FF x) const {
    std::vector<i64> out(k_, 0);
    if (x == FF_ZERO) return out;
    i64 id = exp_id_[static_cast<size_t>(x)];
    for (unsigned i = 0; i < k_; ++i) { out[i] = id % p_; id /= p_; }
    return out;
}

FF Field::from_coeffs(const std::vector<i64>& c) const {
    i64 id = 0;
    for (unsigned i = k_; i-- > 0;)
        id = id * p_ + (i < c.size() ? mod_pos(c[i], p_) : 0);
    if (id == 0) return FF_ZERO;
    return log_[static_cast<size_t>(id)];
}

i64 Field::canonical_id(FF x) const {
    return x == FF_ZERO ? 0 : exp_id_[static_cast<size_t>(x)];
}

FF Field::neg(FF x) const {
    if (x == FF_ZERO) return FF_ZERO;
    if (p_ == 2) return x;
    return (x + minus_one_log_) % unit_order();
}

FF Field::add(FF x, FF y) const {
    if (x == FF_ZERO) return y;
    if (y == FF_ZERO) return x;
    // x + y = x (1 + y/x)
    i64 d = mod_pos(y - x, unit_order());
    i64 z = zech_[static_cast<size_t>(d)];
    if (z < 0) return FF_ZERO;
    return (x + z) % unit_order();
}

FF Field::pow(FF x, i64 e) const {
    if (x == FF_ZERO) {
        if (e <= 0) throw invalid_argument("0^e with e <= 0");
        return FF_ZERO;
    }
    return mod_pos(mul_mod(mod_pos(x, unit_order()), mod_pos(e, unit_order()), unit_order()),
                   unit_order());
}

FF Field::frobenius_power(FF x, unsigned j) const {
    if (x == FF_ZERO) return FF_ZERO;
    i64 q = pow_mod(p_, j, unit_order());
    return mul_mod(x, q, unit_order());
}

FF Field::power_q(FF x, i64 q) const {
    if (x == FF_ZERO) return FF_ZERO;
    return mul_mod(x, mod_pos(q, unit_order()), unit_order());
}

i64 Field::element_order(FF x) const {
    if (x == FF_ZERO) throw invalid_argument("order of zero");
    return unit_order() / gcd_i64(unit_order(), x);
}

FF Field::element_of_order(i64 d) const {
    if (d <= 0 || unit_order() % d != 0)
        throw invalid_argument("element_of_order: order must divide p^k - 1");
    return unit_order() / d % unit_order();
}

bool Field::is_square(FF x) const {
    if (x == FF_ZERO) return true;
    if (p_ == 2) return true;
    return x % 2 == 0 || unit_order() % 2 == 1;
}

FF Field::sqrt(FF x) const {
    if (x == FF_ZERO) return FF_ZERO;
    i64 order = unit_order();
    FF y;
    if (p_ == 2 || order % 2 == 1) {
        // unit group of odd order: halving the exponent always works
        y = mul_mod(x, (order + 1) / 2, order);
    } else {
        if (x % 2 != 0) throw invalid_argument("sqrt: element is a non-square");
        y = x / 2;
    }
    FF y2 = neg(y);
    return canonical_id(y) <= canonical_id(y2) ? y : y2;
}

FieldPtr field_with_orders(i64 p, const std::vector<i64>& orders) {
    i64 k = 1;
    for (i64 d : orders) {
        if (d <= 0) throw invalid_argument("orders must be positive");
        if (gcd_i64(d, p) != 1) throw invalid_argument("order not prime to p");
        k = lcm_i64(k, mult_order(p, d));
    }
    return Field::make(p, static_cast<unsigned>(k));
}

}  // namespace wl
