#ifndef TWC_RING_HPP
#define TWC_RING_HPP

#include <cstdint>
#include <unordered_map>
#include <vector>

namespace twc {

// Element of GR(p^h, 2) in coordinates over Z_{p^h} with respect to the
// basis {1, w}, where w is the class of the modulus variable.
struct GRElem {
    uint64_t c0 = 0;
    uint64_t c1 = 0;
    bool operator==(const GRElem&) const = default;
};

// GR(p^h, 2): quadratic Galois extension of Z_{p^h}. Immutable after init();
// safe to share across threads. All operations are exact integer arithmetic.
class Ring {
public:
    static Ring init(uint64_t p, unsigned h);

    uint64_t p() const { return p_; }
    unsigned h() const { return h_; }
    uint64_t q() const { return q_; }          // p^h
    uint64_t residue_order() const { return p_ * p_; }

    // Modulus polynomial x^2 + mod_c1*x + mod_c0, basic irreducible.
    uint64_t mod_c0() const { return mod_c0_; }
    uint64_t mod_c1() const { return mod_c1_; }

    GRElem xi() const { return xi_; }          // Teichmuller generator, order p^2-1
    bool experimental() const { return p_ == 2; }
    bool minus_one_in_teich() const { return minus_one_in_teich_; }

    // Teichmuller set: index 0 is zero, index i in 1..p^2-1 is xi^i.
    const std::vector<GRElem>& teich_table() const { return teich_; }
    // Exponent i for a unit Teichmuller element, keyed by element index.
    const std::unordered_map<uint64_t, uint64_t>& log_table() const { return log_; }

    // Base ring Z_{p^h}.
    uint64_t zq_add(uint64_t a, uint64_t b) const { return (a + b) % q_; }
    uint64_t zq_sub(uint64_t a, uint64_t b) const { return (a + q_ - b % q_) % q_; }
    uint64_t zq_mul(uint64_t a, uint64_t b) const { return (a % q_) * (b % q_) % q_; }
    uint64_t zq_neg(uint64_t a) const { return (q_ - a % q_) % q_; }
    uint64_t zq_pow(uint64_t a, uint64_t e) const;
    uint64_t zq_inv(uint64_t a) const;         // a must be a unit
    bool zq_is_unit(uint64_t a) const { return a % p_ != 0; }

    GRElem zero() const { return {0, 0}; }
    GRElem one() const { return {1, 0}; }
    GRElem scalar(uint64_t a) const { return {a % q_, 0}; }
    GRElem make(uint64_t c0, uint64_t c1) const { return {c0 % q_, c1 % q_}; }

    GRElem add(GRElem a, GRElem b) const;
    GRElem sub(GRElem a, GRElem b) const;
    GRElem neg(GRElem a) const;
    GRElem mul(GRElem a, GRElem b) const;
    GRElem pow(GRElem a, uint64_t e) const;
    bool is_unit(GRElem a) const;
    bool is_zero(GRElem a) const { return a.c0 == 0 && a.c1 == 0; }

    // Canonical element ordering c1*q + c0, also the log_table key.
    uint64_t index(GRElem a) const { return a.c1 * q_ + a.c0; }
    GRElem from_index(uint64_t i) const { return {i % q_, i / q_}; }

    // Unique Teichmuller element congruent to z mod p (0 for non-units).
    GRElem teich_lift(GRElem z) const;
    // Digits (t_0,...,t_{h-1}) in the Teichmuller set with z = sum p^i t_i.
    std::vector<GRElem> teich_digits(GRElem z) const;
    // Recompose digits; inverse of teich_digits.
    GRElem from_digits(const std::vector<GRElem>& digits) const;

    // The conjugation automorphism: digit-wise t -> t^p.
    GRElem frobenius(GRElem z) const;
    // Tr(z) = z + F(z), lands in Z_{p^h}.
    uint64_t trace(GRElem z) const;

    // Multiplicative order of a unit (divides p^{2h} - p^{2h-2} ... computed
    // by brute force doubling; intended for small test rings).
    uint64_t mul_order(GRElem a) const;

private:
    Ring() = default;
    void check(GRElem a) const;   // rejects elements from a ring with another q

    uint64_t p_ = 0;
    unsigned h_ = 0;
    uint64_t q_ = 0;
    uint64_t mod_c0_ = 0;
    uint64_t mod_c1_ = 0;
    GRElem xi_;
    bool minus_one_in_teich_ = false;
    std::vector<GRElem> teich_;
    std::unordered_map<uint64_t, uint64_t> log_;
};

bool is_prime(uint64_t n);
uint64_t ipow(uint64_t base, uint64_t exp);

}  // namespace twc

#endif
