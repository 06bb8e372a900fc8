#include "dncheck/ntheory.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <utility>

#include "dncheck/errors.hpp"

namespace dncheck {

namespace {

constexpr u64 kSegment = u64{1} << 16;

u64 isqrt(u64 n) {
    auto r = static_cast<u64>(std::sqrt(static_cast<double>(n)));
    while (r * r > n) --r;
    while ((r + 1) * (r + 1) <= n) ++r;
    return r;
}

u64 pow_mod_small(u64 a, u64 n, u64 q) { return mod_pow(Residue(Modulus(q, 1), a), n).value(); }

}  // namespace

std::vector<u64> sieve_primes(u64 lo, u64 hi) {
    if (hi >= (u64{1} << 31)) throw std::invalid_argument("sieve bound must be below 2^31");
    std::vector<u64> out;
    lo = std::max<u64>(lo, 2);
    if (lo > hi) return out;

    const u64 root = isqrt(hi);
    std::vector<bool> small(root + 1, true);
    std::vector<u64> base;
    for (u64 i = 2; i <= root; ++i) {
        if (!small[i]) continue;
        base.push_back(i);
        for (u64 j = i * i; j <= root; j += i) small[j] = false;
    }

    std::vector<char> seg;
    for (u64 start = lo; start <= hi; start += kSegment) {
        const u64 stop = std::min(hi, start + kSegment - 1);
        seg.assign(stop - start + 1, 1);
        for (u64 q : base) {
            u64 first = std::max(q * q, (start + q - 1) / q * q);
            for (u64 j = first; j <= stop; j += q) seg[j - start] = 0;
        }
        for (u64 i = start; i <= stop; ++i) {
            if (seg[i - start]) out.push_back(i);
        }
    }
    return out;
}

int legendre(i64 a, u64 q) {
    Modulus mod(q, 1);
    u64 r = mod.reduce(a);
    if (r == 0) return 0;
    return pow_mod_small(r, (q - 1) / 2, q) == 1 ? 1 : -1;
}

u64 sqrt_mod(i64 a, u64 q) {
    Modulus mod(q, 1);
    const u64 n = mod.reduce(a);
    if (n == 0) return 0;
    if (legendre(static_cast<i64>(n), q) != 1) {
        throw NonResidue(std::to_string(a) + " mod " + std::to_string(q));
    }

    u64 s = 0, d = q - 1;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    u64 z = 2;
    while (legendre(static_cast<i64>(z), q) != -1) ++z;

    u64 c = pow_mod_small(z, d, q);
    u64 t = pow_mod_small(n, d, q);
    u64 r = pow_mod_small(n, (d + 1) / 2, q);
    u64 m = s;
    while (t != 1) {
        u64 i = 0, t2 = t;
        while (t2 != 1) {
            t2 = mul_mod(t2, t2, q);
            ++i;
        }
        u64 b = c;
        for (u64 k = 0; k + 1 < m - i; ++k) b = mul_mod(b, b, q);
        m = i;
        c = mul_mod(b, b, q);
        t = mul_mod(t, c, q);
        r = mul_mod(r, b, q);
    }
    return std::min(r, q - r);
}

TwoSquares two_squares(u64 p) {
    if (p % 4 != 1) throw WrongResidueClass(std::to_string(p) + " is not 1 mod 4");
    if (!is_prime(p)) throw NotPrime(std::to_string(p));

    // Euclid on (p, r) with r^2 = -1: the first two remainders below sqrt(p)
    // are the legs.
    const u64 bound = isqrt(p);
    u64 a = p, b = sqrt_mod(-1, p);
    while (b > bound) {
        u64 t = a % b;
        a = b;
        b = t;
    }
    u64 c = isqrt(p - b * b);
    if (b * b + c * c != p) throw std::logic_error("two-squares descent failed");

    u64 odd = b, even = c;
    if (odd % 2 == 0) std::swap(odd, even);
    i64 x = static_cast<i64>(odd);
    if (x % 4 != 1) x = -x;
    return TwoSquares{p, x, static_cast<i64>(even)};
}

}  // namespace dncheck
