#pragma once

// O(p) kernels for d_k(x), C(2k,k)/4^k and binomial coefficients mod p^e.

#include <cstddef>
#include <vector>

#include "dncheck/modp.hpp"

namespace dncheck {

/// Values v_0..v_N reduced mod p^e.
class SequenceBuffer {
public:
    SequenceBuffer(const Modulus& mod, std::vector<u64> values) : mod_(mod), values_(std::move(values)) {}

    const Modulus& modulus() const noexcept { return mod_; }
    std::size_t size() const noexcept { return values_.size(); }
    Residue operator[](std::size_t k) const { return Residue(mod_, values_.at(k)); }
    const std::vector<u64>& raw() const noexcept { return values_; }

private:
    Modulus mod_;
    std::vector<u64> values_;
};

/// C(n, k) = p^v * u with u a unit. Exact zero for k < 0 or k > n.
/// Stripped-product method: O(min(k, n-k)).
ValuatedResidue binom_valuated(u64 n, i64 k, const Modulus& mod);

/// Inverses of 1..n mod p^e by one batched inversion; requires n < p.
/// Entry 0 is unused (set to 0).
std::vector<u64> inverse_table(u64 n, const Modulus& mod);

/// C(x, k) for a residue x: prod_{i<k} (x - i) / (i + 1). Requires k < p.
Residue gen_binom_residue(const Residue& x, u64 k);

/// d_n(x) straight from its defining sum, O(n). Requires n < p.
Residue d_direct(const Residue& x, u64 n);

/// d_0(x)..d_N(x) through (n+1) d_{n+1} = (2x+1) d_n + n d_{n-1}.
/// Requires N <= p - 1.
SequenceBuffer d_sequence(const Residue& x, u64 n_max);

/// c_k = C(2k,k)/4^k for k = 0..N through c_{k+1} = c_k (2k+1)/(2k+2).
/// Requires N <= p - 1.
SequenceBuffer central_ratio_sequence(u64 n_max, const Modulus& mod);

}  // namespace dncheck
