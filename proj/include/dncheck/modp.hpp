#pragma once

// Residue arithmetic modulo p^e (p an odd prime below 2^31, e in {1, 2}),
// plus p-adically valuated residues that stay exact through divisions by p.

#include <compare>
#include <cstdint>
#include <string>

namespace dncheck {

using u64 = std::uint64_t;
using i64 = std::int64_t;
using u128 = unsigned __int128;

/// Deterministic Miller-Rabin, exact for every 64-bit n.
bool is_prime(u64 n);

/// The modulus p^e. Construction rejects composite p, p = 2, p >= 2^31 and
/// exponents other than 1 or 2.
class Modulus {
public:
    Modulus(u64 p, int e);

    u64 p() const noexcept { return p_; }
    int e() const noexcept { return e_; }
    u64 m() const noexcept { return m_; }

    /// Reduce any signed integer into [0, m).
    u64 reduce(i64 a) const noexcept;

    bool operator==(const Modulus&) const = default;

private:
    u64 p_;
    u64 m_;
    int e_;
};

/// a, b < m. Single-width when the product fits in 64 bits.
inline u64 mul_mod(u64 a, u64 b, u64 m) noexcept {
    if (m <= 0xFFFFFFFFu) return a * b % m;
    return static_cast<u64>(static_cast<u128>(a) * b % m);
}

class Residue {
public:
    Residue(const Modulus& mod, u64 v) : mod_(mod), v_(v % mod.m()) {}

    static Residue from_signed(const Modulus& mod, i64 v) { return Residue(mod, mod.reduce(v)); }
    static Residue zero(const Modulus& mod) { return Residue(mod, 0); }
    static Residue one(const Modulus& mod) { return Residue(mod, 1); }

    const Modulus& modulus() const noexcept { return mod_; }
    u64 value() const noexcept { return v_; }
    bool is_zero() const noexcept { return v_ == 0; }

    Residue operator+(const Residue& o) const;
    Residue operator-(const Residue& o) const;
    Residue operator*(const Residue& o) const;
    Residue operator-() const;
    Residue& operator+=(const Residue& o) { return *this = *this + o; }
    Residue& operator-=(const Residue& o) { return *this = *this - o; }
    Residue& operator*=(const Residue& o) { return *this = *this * o; }

    Residue operator+(i64 k) const { return *this + from_signed(mod_, k); }
    Residue operator-(i64 k) const { return *this - from_signed(mod_, k); }
    Residue operator*(i64 k) const { return *this * from_signed(mod_, k); }

    bool operator==(const Residue& o) const { return mod_ == o.mod_ && v_ == o.v_; }
    bool operator==(u64 k) const { return v_ == k % mod_.m(); }

private:
    void check_same(const Residue& o) const;

    Modulus mod_;
    u64 v_;
};

/// Inverse modulo p^e by extended gcd. Throws NotInvertible when p | a.
Residue mod_inv(const Residue& a);

/// a^n by square-and-multiply.
Residue mod_pow(const Residue& a, u64 n);

/// num / den mod p^e. Throws DenominatorDivisibleByP when p | den.
Residue embed_rational(i64 num, i64 den, const Modulus& mod);

/// p^val * unit, exact through division by p. `unit` is known mod p^e.
/// Exact zero is a separate state (infinite valuation), so it survives
/// multiplication unchanged.
class ValuatedResidue {
public:
    static ValuatedResidue exact_zero(const Modulus& mod) { return ValuatedResidue(mod); }
    /// Requires p not dividing unit; throws std::invalid_argument otherwise.
    ValuatedResidue(const Modulus& mod, i64 val, u64 unit);

    /// Strip every factor of p out of an exact integer.
    static ValuatedResidue from_integer(const Modulus& mod, i64 n);
    static ValuatedResidue from_unit(const Residue& unit);

    const Modulus& modulus() const noexcept { return mod_; }
    bool is_exact_zero() const noexcept { return zero_; }
    /// Meaningless for an exact zero.
    i64 valuation() const noexcept { return val_; }
    u64 unit() const noexcept { return unit_; }

    bool operator==(const ValuatedResidue&) const = default;

    std::string to_string() const;

private:
    explicit ValuatedResidue(const Modulus& mod) : mod_(mod), val_(0), unit_(0), zero_(true) {}

    Modulus mod_;
    i64 val_;
    u64 unit_;
    bool zero_;
};

ValuatedResidue vr_mul(const ValuatedResidue& a, const ValuatedResidue& b);
/// Valuations subtract and may go negative. Throws DivisionByExactZero.
ValuatedResidue vr_div(const ValuatedResidue& a, const ValuatedResidue& b);
ValuatedResidue vr_neg(const ValuatedResidue& a);
ValuatedResidue vr_pow(const ValuatedResidue& a, u64 n);

/// p^val * unit mod p^e (0 once val >= e). Throws NegativeValuation when the
/// value is not p-integral.
Residue vr_collapse(const ValuatedResidue& a);

/// Re-reduce a residue modulo p (drop from p^2 to p).
Residue reduce_to(const Residue& a, const Modulus& target);

}  // namespace dncheck
