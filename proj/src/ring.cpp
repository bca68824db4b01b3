#include "twc/ring.hpp"

#include <stdexcept>
#include <string>

namespace twc {

bool is_prime(uint64_t n) {
    if (n < 2) return false;
    for (uint64_t f = 2; f * f <= n; ++f)
        if (n % f == 0) return false;
    return true;
}

uint64_t ipow(uint64_t base, uint64_t exp) {
    uint64_t r = 1;
    while (exp) {
        if (exp & 1) r *= base;
        base *= base;
        exp >>= 1;
    }
    return r;
}

namespace {

// Multiplication of residue-field elements (coords in 0..p-1) modulo
// x^2 + c1*x + c0 and p.
GRElem fp2_mul(GRElem a, GRElem b, uint64_t p, uint64_t c0, uint64_t c1) {
    // w^2 = -c1*w - c0
    uint64_t t0 = a.c0 * b.c0 % p;
    uint64_t t1 = (a.c0 * b.c1 + a.c1 * b.c0) % p;
    uint64_t t2 = a.c1 * b.c1 % p;
    uint64_t r0 = (t0 + t2 * (p - c0 % p)) % p;
    uint64_t r1 = (t1 + t2 * (p - c1 % p)) % p;
    return {r0, r1};
}

uint64_t fp2_order(GRElem a, uint64_t p, uint64_t c0, uint64_t c1) {
    GRElem w = a;
    uint64_t e = 1;
    GRElem one{1, 0};
    while (!(w == one)) {
        w = fp2_mul(w, a, p, c0, c1);
        ++e;
        if (e > p * p) return 0;  // not a unit
    }
    return e;
}

}  // namespace

void Ring::check(GRElem a) const {
    if (a.c0 >= q_ || a.c1 >= q_)
        throw std::invalid_argument("GRElem does not belong to this ring");
}

uint64_t Ring::zq_pow(uint64_t a, uint64_t e) const {
    a %= q_;
    uint64_t r = 1;
    while (e) {
        if (e & 1) r = r * a % q_;
        a = a * a % q_;
        e >>= 1;
    }
    return r;
}

uint64_t Ring::zq_inv(uint64_t a) const {
    if (!zq_is_unit(a))
        throw std::invalid_argument("zq_inv of a non-unit");
    uint64_t phi = q_ - q_ / p_;  // order of the unit group of Z_{p^h}
    return zq_pow(a, phi - 1);
}

GRElem Ring::add(GRElem a, GRElem b) const {
    check(a);
    check(b);
    return {(a.c0 + b.c0) % q_, (a.c1 + b.c1) % q_};
}

GRElem Ring::sub(GRElem a, GRElem b) const {
    check(a);
    check(b);
    return {(a.c0 + q_ - b.c0) % q_, (a.c1 + q_ - b.c1) % q_};
}

GRElem Ring::neg(GRElem a) const {
    check(a);
    return {(q_ - a.c0) % q_, (q_ - a.c1) % q_};
}

GRElem Ring::mul(GRElem a, GRElem b) const {
    check(a);
    check(b);
    // w^2 = -mod_c1*w - mod_c0
    uint64_t t0 = a.c0 * b.c0 % q_;
    uint64_t t1 = (a.c0 * b.c1 + a.c1 * b.c0) % q_;
    uint64_t t2 = a.c1 * b.c1 % q_;
    uint64_t r0 = (t0 + t2 * ((q_ - mod_c0_) % q_)) % q_;
    uint64_t r1 = (t1 + t2 * ((q_ - mod_c1_) % q_)) % q_;
    return {r0, r1};
}

GRElem Ring::pow(GRElem a, uint64_t e) const {
    check(a);
    GRElem r = one();
    GRElem w = a;
    while (e) {
        if (e & 1) r = mul(r, w);
        w = mul(w, w);
        e >>= 1;
    }
    return r;
}

bool Ring::is_unit(GRElem a) const {
    check(a);
    return a.c0 % p_ != 0 || a.c1 % p_ != 0;
}

GRElem Ring::teich_lift(GRElem z) const {
    check(z);
    uint64_t psq = p_ * p_;
    GRElem w = z;
    for (unsigned i = 0; i < h_; ++i) w = pow(w, psq);
    if (!(pow(w, psq) == w))
        throw std::runtime_error("teich_lift did not reach a fixed point");
    return w;
}

std::vector<GRElem> Ring::teich_digits(GRElem z) const {
    check(z);
    std::vector<GRElem> digits;
    digits.reserve(h_);
    GRElem rest = z;
    for (unsigned i = 0; i < h_; ++i) {
        GRElem t = teich_lift(rest);
        digits.push_back(t);
        GRElem diff = sub(rest, t);
        if (diff.c0 % p_ != 0 || diff.c1 % p_ != 0)
            throw std::runtime_error("teich_digits: non-divisible remainder");
        rest = {diff.c0 / p_, diff.c1 / p_};
    }
    return digits;
}

GRElem Ring::from_digits(const std::vector<GRElem>& digits) const {
    GRElem acc = zero();
    uint64_t pk = 1;
    for (const GRElem& t : digits) {
        acc = add(acc, mul(scalar(pk), t));
        pk *= p_;
    }
    return acc;
}

GRElem Ring::frobenius(GRElem z) const {
    std::vector<GRElem> digits = teich_digits(z);
    for (GRElem& t : digits) t = pow(t, p_);
    return from_digits(digits);
}

uint64_t Ring::trace(GRElem z) const {
    GRElem s = add(z, frobenius(z));
    if (s.c1 != 0)
        throw std::runtime_error("trace left the base ring (broken Frobenius)");
    return s.c0;
}

uint64_t Ring::mul_order(GRElem a) const {
    if (!is_unit(a))
        throw std::invalid_argument("mul_order of a non-unit");
    GRElem w = a;
    uint64_t e = 1;
    while (!(w == one())) {
        w = mul(w, a);
        ++e;
        if (e > q_ * q_)
            throw std::runtime_error("mul_order runaway");
    }
    return e;
}

Ring Ring::init(uint64_t p, unsigned h) {
    if (!is_prime(p))
        throw std::invalid_argument("p must be prime, got " + std::to_string(p));
    if (h < 1)
        throw std::invalid_argument("h must be >= 1");
    // q^2 and intermediate products must stay exact in 64 bits.
    if (h > 1 && ipow(p, 2 * h) > (uint64_t(1) << 62))
        throw std::invalid_argument("p^(2h) exceeds the exact integer range");

    Ring R;
    R.p_ = p;
    R.h_ = h;
    R.q_ = ipow(p, h);

    // Smallest monic irreducible x^2 + c1*x + c0 over F_p, coefficients
    // compared as (c1, c0), lifted verbatim.
    bool found = false;
    for (uint64_t c1 = 0; c1 < p && !found; ++c1) {
        for (uint64_t c0 = 0; c0 < p && !found; ++c0) {
            bool has_root = false;
            for (uint64_t x = 0; x < p; ++x) {
                if ((x * x + c1 * x + c0) % p == 0) {
                    has_root = true;
                    break;
                }
            }
            if (!has_root) {
                R.mod_c0_ = c0;
                R.mod_c1_ = c1;
                found = true;
            }
        }
    }
    if (!found)
        throw std::runtime_error("no irreducible quadratic found");  // cannot happen

    // Smallest generator of the residue field's unit group, in the
    // ordering c1*p + c0.
    uint64_t unit_order = p * p - 1;
    GRElem gen{0, 0};
    bool gen_found = false;
    for (uint64_t i = 1; i < p * p && !gen_found; ++i) {
        GRElem g{i % p, i / p};
        if (fp2_order(g, p, R.mod_c0_, R.mod_c1_) == unit_order) {
            gen = g;
            gen_found = true;
        }
    }
    if (!gen_found)
        throw std::runtime_error("no residue field generator found");

    R.xi_ = R.teich_lift(gen);

    if (!(R.pow(R.xi_, unit_order) == R.one()))
        throw std::runtime_error("xi does not have order p^2-1");
    for (uint64_t f = 2; f * f <= unit_order; ++f) {
        if (unit_order % f == 0) {
            if (R.pow(R.xi_, unit_order / f) == R.one() ||
                R.pow(R.xi_, f) == R.one())
                throw std::runtime_error("xi has a proper order");
        }
    }

    R.teich_.resize(p * p);
    R.teich_[0] = R.zero();
    GRElem w = R.one();
    for (uint64_t i = 1; i < p * p; ++i) {
        w = R.mul(w, R.xi_);  // teich_[i] = xi^i, so teich_[p^2-1] = 1
        R.teich_[i] = w;
        R.log_[R.index(w)] = i;
    }

    R.minus_one_in_teich_ = R.log_.count(R.index(R.scalar(R.q_ - 1))) > 0;
    return R;
}

}  // namespace twc
