#include "dncheck/sequences.hpp"

#include <algorithm>

#include "dncheck/errors.hpp"

namespace dncheck {

namespace {

void require_below_p(u64 n, const Modulus& mod, const char* what) {
    if (n >= mod.p()) {
        throw IndexTooLarge(std::string(what) + ": index " + std::to_string(n) + " >= p=" +
                            std::to_string(mod.p()));
    }
}

}  // namespace

ValuatedResidue binom_valuated(u64 n, i64 k, const Modulus& mod) {
    if (k < 0 || static_cast<u64>(k) > n) return ValuatedResidue::exact_zero(mod);
    const u64 kk = std::min<u64>(static_cast<u64>(k), n - static_cast<u64>(k));
    const u64 p = mod.p();
    const u64 m = mod.m();

    i64 val = 0;
    u64 num = 1 % m, den = 1 % m;
    for (u64 i = 1; i <= kk; ++i) {
        u64 top = n - kk + i;
        u64 bottom = i;
        while (top % p == 0) {
            top /= p;
            ++val;
        }
        while (bottom % p == 0) {
            bottom /= p;
            --val;
        }
        num = mul_mod(num, top % m, m);
        den = mul_mod(den, bottom % m, m);
    }
    Residue unit = Residue(mod, num) * mod_inv(Residue(mod, den));
    return ValuatedResidue(mod, val, unit.value());
}

std::vector<u64> inverse_table(u64 n, const Modulus& mod) {
    require_below_p(n, mod, "inverse_table");
    const u64 m = mod.m();
    std::vector<u64> prefix(n + 1, 1 % m);
    for (u64 i = 1; i <= n; ++i) prefix[i] = mul_mod(prefix[i - 1], i, m);
    std::vector<u64> inv(n + 1, 0);
    if (n == 0) return inv;
    u64 acc = mod_inv(Residue(mod, prefix[n])).value();
    for (u64 i = n; i >= 1; --i) {
        inv[i] = mul_mod(acc, prefix[i - 1], m);
        acc = mul_mod(acc, i, m);
    }
    return inv;
}

Residue gen_binom_residue(const Residue& x, u64 k) {
    const Modulus& mod = x.modulus();
    require_below_p(k, mod, "gen_binom_residue");
    Residue num = Residue::one(mod);
    Residue den = Residue::one(mod);
    for (u64 i = 0; i < k; ++i) {
        num *= x - static_cast<i64>(i);
        den *= Residue(mod, i + 1);
    }
    return num * mod_inv(den);
}

Residue d_direct(const Residue& x, u64 n) {
    const Modulus& mod = x.modulus();
    require_below_p(n, mod, "d_direct");
    const auto inv = inverse_table(n, mod);
    // term_k = C(n,k) C(x,k) 2^k, advanced by (n-k)(x-k)*2 / (k+1)^2.
    Residue term = Residue::one(mod);
    Residue sum = term;
    for (u64 k = 0; k < n; ++k) {
        Residue step = Residue(mod, n - k) * (x - static_cast<i64>(k)) * 2;
        Residue inv_k1(mod, inv[k + 1]);
        term = term * step * inv_k1 * inv_k1;
        sum += term;
    }
    return sum;
}

SequenceBuffer d_sequence(const Residue& x, u64 n_max) {
    const Modulus& mod = x.modulus();
    require_below_p(n_max, mod, "d_sequence");
    const u64 m = mod.m();
    std::vector<u64> d(n_max + 1);
    d[0] = 1 % m;
    if (n_max == 0) return SequenceBuffer(mod, std::move(d));

    const auto inv = inverse_table(n_max, mod);
    const u64 a = (x * 2 + 1).value();
    d[1] = a;
    for (u64 n = 1; n < n_max; ++n) {
        u64 rhs = mul_mod(a, d[n], m) + mul_mod(n % m, d[n - 1], m);
        if (rhs >= m) rhs -= m;
        d[n + 1] = mul_mod(rhs, inv[n + 1], m);
    }
    return SequenceBuffer(mod, std::move(d));
}

SequenceBuffer central_ratio_sequence(u64 n_max, const Modulus& mod) {
    require_below_p(n_max, mod, "central_ratio_sequence");
    const u64 m = mod.m();
    std::vector<u64> c(n_max + 1);
    c[0] = 1 % m;
    if (n_max == 0) return SequenceBuffer(mod, std::move(c));

    // 1/(2k+2) = inv(2) * inv(k+1) with k+1 <= N < p.
    const auto inv = inverse_table(n_max, mod);
    const u64 inv2 = mod_inv(Residue(mod, 2)).value();
    for (u64 k = 0; k < n_max; ++k) {
        u64 step = mul_mod((2 * k + 1) % m, mul_mod(inv2, inv[k + 1], m), m);
        c[k + 1] = mul_mod(c[k], step, m);
    }
    return SequenceBuffer(mod, std::move(c));
}

}  // namespace dncheck
