#pragma once

// Exact rational polynomials and the finite identities behind the reduction
// of the d_k(x)^2 sums. Nothing here depends on a modulus.

#include <boost/multiprecision/cpp_int.hpp>
#include <string>
#include <vector>

namespace dncheck {

using BigInt = boost::multiprecision::cpp_int;
using BigRational = boost::multiprecision::cpp_rational;

/// Dense polynomial over Q, coefficients ascending. Trailing zeros are
/// trimmed, so the zero polynomial has no coefficients.
class RatPolynomial {
public:
    RatPolynomial() = default;
    explicit RatPolynomial(std::vector<BigRational> coeffs);
    static RatPolynomial constant(const BigRational& c);
    /// x + shift
    static RatPolynomial linear(const BigRational& shift);

    const std::vector<BigRational>& coeffs() const noexcept { return coeffs_; }
    /// -1 for the zero polynomial.
    int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
    BigRational operator()(const BigRational& x) const;

    RatPolynomial operator+(const RatPolynomial& o) const;
    RatPolynomial operator*(const RatPolynomial& o) const;
    RatPolynomial operator*(const BigRational& s) const;
    RatPolynomial& operator+=(const RatPolynomial& o) { return *this = *this + o; }

    bool operator==(const RatPolynomial& o) const { return coeffs_ == o.coeffs_; }

    std::string to_string() const;

private:
    void trim();
    std::vector<BigRational> coeffs_;
};

BigInt binomial(long n, long k);
/// C(x, k) for rational x.
BigRational gen_binomial(const BigRational& x, long k);

/// x(x-1)...(x-k+1)/k!
RatPolynomial binom_poly(long k);
/// C(x+k, k) = (x+1)(x+2)...(x+k)/k!
RatPolynomial shifted_binom_poly(long k);
/// d_n(x) = sum_k C(n,k) C(x,k) 2^k
RatPolynomial d_poly(long n);

/// d_n(x)^2 == sum_k C(n+k,2k) C(x,k) C(x+k,k) 4^k, coefficient-wise.
bool guo_identity_check(long n);

/// Lattice paths (0,0) -> (m,n) with E, N and NE steps, by dynamic programming.
BigInt delannoy_dp(long m, long n);
/// Both closed forms of the Delannoy number agree with the DP.
bool delannoy_two_forms_check(long m, long n);

/// The four rational arguments of the main congruences.
enum class Family { MinusQuarter, MinusSixth, PlusQuarter, PlusSixth };

BigRational family_value(Family f);
std::string family_name(Family f);

/// C(x,j) C(x+j,j) for the family's x.
BigRational product_lhs(Family f, long j);
/// The closed form in central binomials, e.g. (-1)^j C(4j,2j) C(2j,j) / 64^j.
BigRational product_rhs(Family f, long j);
bool product_identity_check(Family f, long j);

/// sum_{k=j}^{m} (-1)^k C(m,k) C(k+j,2j) == (-1)^m C(j, m-j)
bool chu_vandermonde_check(long m, long j);

/// C(j, (p-1)/2 - j) == 0 for every 0 <= j < (p-1)/4.
bool small_index_binomials_vanish(long p);

struct IdentityCheck {
    std::string name;
    long cases = 0;
    long passed = 0;

    bool ok() const { return cases == passed; }
};

/// Guo's identity for n <= nmax, the product identities for j <= jmax, the
/// Chu-Vandermonde sums for j <= m <= mmax, the Delannoy forms (and d_n(m)
/// against the DP) on the grid 0..grid, and the small-index vanishing for
/// odd primes below vanish_pmax.
std::vector<IdentityCheck> run_identity_suite(long nmax, long jmax, long mmax, long grid = 12,
                                              long vanish_pmax = 200);

}  // namespace dncheck
