#include "dncheck/modp.hpp"

#include <stdexcept>

#include "dncheck/errors.hpp"

namespace dncheck {

namespace {

u64 pow_raw(u64 a, u64 n, u64 m) {
    u64 r = 1 % m;
    a %= m;
    while (n) {
        if (n & 1) r = mul_mod(r, a, m);
        a = mul_mod(a, a, m);
        n >>= 1;
    }
    return r;
}

// Extended Euclid on signed 128-bit to stay clear of overflow for m < 2^62.
bool inverse_raw(u64 a, u64 m, u64& out) {
    __int128 old_r = a, r = m, old_s = 1, s = 0;
    while (r != 0) {
        __int128 q = old_r / r;
        __int128 t = old_r - q * r;
        old_r = r;
        r = t;
        t = old_s - q * s;
        old_s = s;
        s = t;
    }
    if (old_r != 1) return false;
    old_s %= static_cast<__int128>(m);
    if (old_s < 0) old_s += m;
    out = static_cast<u64>(old_s);
    return true;
}

}  // namespace

bool is_prime(u64 n) {
    if (n < 2) return false;
    constexpr u64 kBases[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};
    for (u64 q : kBases) {
        if (n % q == 0) return n == q;
    }
    u64 d = n - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    // The first twelve prime bases decide every 64-bit n.
    for (u64 a : kBases) {
        u64 x = pow_raw(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (int i = 1; i < s; ++i) {
            x = mul_mod(x, x, n);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    return true;
}

Modulus::Modulus(u64 p, int e) : p_(p), m_(0), e_(e) {
    if (e != 1 && e != 2) throw std::invalid_argument("exponent must be 1 or 2");
    if (p <= 2 || p >= (u64{1} << 31) || !is_prime(p)) {
        throw NotPrime(std::to_string(p) + " is not an odd prime below 2^31");
    }
    m_ = e == 1 ? p : p * p;
}

u64 Modulus::reduce(i64 a) const noexcept {
    i64 r = a % static_cast<i64>(m_);
    return static_cast<u64>(r < 0 ? r + static_cast<i64>(m_) : r);
}

void Residue::check_same(const Residue& o) const {
    if (!(mod_ == o.mod_)) {
        throw ModulusMismatch("mod " + std::to_string(mod_.m()) + " vs mod " + std::to_string(o.mod_.m()));
    }
}

Residue Residue::operator+(const Residue& o) const {
    check_same(o);
    u64 s = v_ + o.v_;
    return Residue(mod_, s >= mod_.m() ? s - mod_.m() : s);
}

Residue Residue::operator-(const Residue& o) const {
    check_same(o);
    return Residue(mod_, v_ >= o.v_ ? v_ - o.v_ : v_ + mod_.m() - o.v_);
}

Residue Residue::operator*(const Residue& o) const {
    check_same(o);
    return Residue(mod_, mul_mod(v_, o.v_, mod_.m()));
}

Residue Residue::operator-() const { return Residue(mod_, v_ == 0 ? 0 : mod_.m() - v_); }

Residue mod_inv(const Residue& a) {
    const Modulus& mod = a.modulus();
    u64 inv = 0;
    if (a.value() % mod.p() == 0 || !inverse_raw(a.value(), mod.m(), inv)) {
        throw NotInvertible(std::to_string(a.value()) + " mod " + std::to_string(mod.m()));
    }
    return Residue(mod, inv);
}

Residue mod_pow(const Residue& a, u64 n) {
    return Residue(a.modulus(), pow_raw(a.value(), n, a.modulus().m()));
}

Residue embed_rational(i64 num, i64 den, const Modulus& mod) {
    if (den == 0 || den % static_cast<i64>(mod.p()) == 0) {
        throw DenominatorDivisibleByP(std::to_string(num) + "/" + std::to_string(den) + " at p=" +
                                      std::to_string(mod.p()));
    }
    return Residue::from_signed(mod, num) * mod_inv(Residue::from_signed(mod, den));
}

ValuatedResidue::ValuatedResidue(const Modulus& mod, i64 val, u64 unit)
    : mod_(mod), val_(val), unit_(unit % mod.m()), zero_(false) {
    if (unit_ % mod.p() == 0) throw std::invalid_argument("valuated unit divisible by p");
}

ValuatedResidue ValuatedResidue::from_integer(const Modulus& mod, i64 n) {
    if (n == 0) return exact_zero(mod);
    const i64 p = static_cast<i64>(mod.p());
    i64 val = 0;
    while (n % p == 0) {
        n /= p;
        ++val;
    }
    return ValuatedResidue(mod, val, mod.reduce(n));
}

ValuatedResidue ValuatedResidue::from_unit(const Residue& unit) {
    return ValuatedResidue(unit.modulus(), 0, unit.value());
}

std::string ValuatedResidue::to_string() const {
    if (zero_) return "0";
    return std::to_string(mod_.p()) + "^" + std::to_string(val_) + "*" + std::to_string(unit_);
}

ValuatedResidue vr_mul(const ValuatedResidue& a, const ValuatedResidue& b) {
    if (!(a.modulus() == b.modulus())) throw ModulusMismatch("valuated product");
    if (a.is_exact_zero() || b.is_exact_zero()) return ValuatedResidue::exact_zero(a.modulus());
    return ValuatedResidue(a.modulus(), a.valuation() + b.valuation(),
                           mul_mod(a.unit(), b.unit(), a.modulus().m()));
}

ValuatedResidue vr_div(const ValuatedResidue& a, const ValuatedResidue& b) {
    if (!(a.modulus() == b.modulus())) throw ModulusMismatch("valuated quotient");
    if (b.is_exact_zero()) throw DivisionByExactZero(a.to_string() + " / 0");
    if (a.is_exact_zero()) return a;
    const Modulus& mod = a.modulus();
    Residue inv = mod_inv(Residue(mod, b.unit()));
    return ValuatedResidue(mod, a.valuation() - b.valuation(), mul_mod(a.unit(), inv.value(), mod.m()));
}

ValuatedResidue vr_neg(const ValuatedResidue& a) {
    if (a.is_exact_zero()) return a;
    const u64 m = a.modulus().m();
    return ValuatedResidue(a.modulus(), a.valuation(), m - a.unit());
}

ValuatedResidue vr_pow(const ValuatedResidue& a, u64 n) {
    if (n == 0) return ValuatedResidue(a.modulus(), 0, 1);
    if (a.is_exact_zero()) return a;
    return ValuatedResidue(a.modulus(), a.valuation() * static_cast<i64>(n),
                           pow_raw(a.unit(), n, a.modulus().m()));
}

Residue vr_collapse(const ValuatedResidue& a) {
    const Modulus& mod = a.modulus();
    if (a.is_exact_zero()) return Residue::zero(mod);
    if (a.valuation() < 0) throw NegativeValuation(a.to_string() + " is not p-integral");
    if (a.valuation() >= mod.e()) return Residue::zero(mod);
    u64 scale = a.valuation() == 0 ? 1 : mod.p();
    return Residue(mod, mul_mod(scale, a.unit(), mod.m()));
}

Residue reduce_to(const Residue& a, const Modulus& target) {
    if (a.modulus().p() != target.p() || target.e() > a.modulus().e()) {
        throw ModulusMismatch("cannot reduce mod " + std::to_string(a.modulus().m()) + " to mod " +
                              std::to_string(target.m()));
    }
    return Residue(target, a.value());
}

}  // namespace dncheck
