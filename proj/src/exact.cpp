#include "dncheck/exact.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "dncheck/ntheory.hpp"

namespace dncheck {

namespace {

BigRational sign(long e) { return (e % 2 == 0) ? BigRational(1) : BigRational(-1); }

// cpp_rational rejects a negative denominator, so move the sign up first.
BigRational ratio(BigInt num, BigInt den) {
    if (den < 0) {
        num = -num;
        den = -den;
    }
    return BigRational(num, den);
}

BigInt ipow(long base, long e) { return boost::multiprecision::pow(BigInt(base), static_cast<unsigned>(e)); }

}  // namespace

RatPolynomial::RatPolynomial(std::vector<BigRational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

RatPolynomial RatPolynomial::constant(const BigRational& c) { return RatPolynomial({c}); }

RatPolynomial RatPolynomial::linear(const BigRational& shift) { return RatPolynomial({shift, BigRational(1)}); }

void RatPolynomial::trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

BigRational RatPolynomial::operator()(const BigRational& x) const {
    BigRational acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

RatPolynomial RatPolynomial::operator+(const RatPolynomial& o) const {
    std::vector<BigRational> out(std::max(coeffs_.size(), o.coeffs_.size()));
    for (std::size_t i = 0; i < coeffs_.size(); ++i) out[i] += coeffs_[i];
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) out[i] += o.coeffs_[i];
    return RatPolynomial(std::move(out));
}

RatPolynomial RatPolynomial::operator*(const RatPolynomial& o) const {
    if (coeffs_.empty() || o.coeffs_.empty()) return {};
    std::vector<BigRational> out(coeffs_.size() + o.coeffs_.size() - 1);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        for (std::size_t j = 0; j < o.coeffs_.size(); ++j) out[i + j] += coeffs_[i] * o.coeffs_[j];
    }
    return RatPolynomial(std::move(out));
}

RatPolynomial RatPolynomial::operator*(const BigRational& s) const {
    std::vector<BigRational> out = coeffs_;
    for (auto& c : out) c *= s;
    return RatPolynomial(std::move(out));
}

std::string RatPolynomial::to_string() const {
    if (coeffs_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i] == 0) continue;
        if (!first) os << " + ";
        os << "(" << coeffs_[i] << ")";
        if (i > 0) os << "*x^" << i;
        first = false;
    }
    return os.str();
}

BigInt binomial(long n, long k) {
    if (k < 0 || n < 0 || k > n) return 0;
    k = std::min(k, n - k);
    BigInt r = 1;
    for (long i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

BigRational gen_binomial(const BigRational& x, long k) {
    if (k < 0) return 0;
    BigRational r = 1;
    for (long i = 0; i < k; ++i) r = r * (x - i) / (i + 1);
    return r;
}

RatPolynomial binom_poly(long k) {
    RatPolynomial r = RatPolynomial::constant(1);
    for (long i = 0; i < k; ++i) r = r * RatPolynomial::linear(-i) * BigRational(1, i + 1);
    return r;
}

RatPolynomial shifted_binom_poly(long k) {
    RatPolynomial r = RatPolynomial::constant(1);
    for (long i = 1; i <= k; ++i) r = r * RatPolynomial::linear(i) * BigRational(1, i);
    return r;
}

RatPolynomial d_poly(long n) {
    RatPolynomial r;
    for (long k = 0; k <= n; ++k) r += binom_poly(k) * BigRational(binomial(n, k) * ipow(2, k));
    return r;
}

bool guo_identity_check(long n) {
    RatPolynomial d = d_poly(n);
    RatPolynomial rhs;
    for (long k = 0; k <= n; ++k) {
        rhs += binom_poly(k) * shifted_binom_poly(k) * BigRational(binomial(n + k, 2 * k) * ipow(4, k));
    }
    return d * d == rhs;
}

BigInt delannoy_dp(long m, long n) {
    if (m < 0 || n < 0) throw std::invalid_argument("delannoy_dp: negative index");
    std::vector<BigInt> prev(n + 1, 1), cur(n + 1);
    for (long i = 1; i <= m; ++i) {
        cur[0] = 1;
        for (long j = 1; j <= n; ++j) cur[j] = prev[j] + cur[j - 1] + prev[j - 1];
        std::swap(prev, cur);
    }
    return prev[n];
}

bool delannoy_two_forms_check(long m, long n) {
    BigInt first = 0, second = 0;
    for (long k = 0; k <= n; ++k) {
        first += binomial(n, k) * binomial(m, k) * ipow(2, k);
        second += binomial(n, k) * binomial(n + m - k, n);
    }
    BigInt dp = delannoy_dp(m, n);
    return first == dp && second == dp;
}

BigRational family_value(Family f) {
    switch (f) {
        case Family::MinusQuarter: return BigRational(-1, 4);
        case Family::MinusSixth: return BigRational(-1, 6);
        case Family::PlusQuarter: return BigRational(1, 4);
        case Family::PlusSixth: return BigRational(1, 6);
    }
    throw std::invalid_argument("unknown family");
}

std::string family_name(Family f) {
    switch (f) {
        case Family::MinusQuarter: return "-1/4";
        case Family::MinusSixth: return "-1/6";
        case Family::PlusQuarter: return "1/4";
        case Family::PlusSixth: return "1/6";
    }
    throw std::invalid_argument("unknown family");
}

BigRational product_lhs(Family f, long j) {
    BigRational x = family_value(f);
    return gen_binomial(x, j) * gen_binomial(x + j, j);
}

BigRational product_rhs(Family f, long j) {
    switch (f) {
        case Family::MinusQuarter:
            return sign(j) * ratio(binomial(4 * j, 2 * j) * binomial(2 * j, j), ipow(64, j));
        case Family::MinusSixth:
            return sign(j) * ratio(binomial(6 * j, 3 * j) * binomial(3 * j, j), ipow(432, j));
        case Family::PlusQuarter:
            return sign(j + 1) *
                   ratio((4 * j + 1) * binomial(4 * j, 2 * j) * binomial(2 * j, j), (4 * j - 1) * ipow(64, j));
        case Family::PlusSixth:
            return sign(j + 1) *
                   ratio((6 * j + 1) * binomial(6 * j, 3 * j) * binomial(3 * j, j), (6 * j - 1) * ipow(432, j));
    }
    throw std::invalid_argument("unknown family");
}

bool product_identity_check(Family f, long j) { return product_lhs(f, j) == product_rhs(f, j); }

bool chu_vandermonde_check(long m, long j) {
    if (j < 0 || j > m) throw std::invalid_argument("chu_vandermonde_check requires 0 <= j <= m");
    BigInt sum = 0;
    for (long k = j; k <= m; ++k) {
        BigInt term = binomial(m, k) * binomial(k + j, 2 * j);
        sum += (k % 2 == 0) ? term : BigInt(-term);
    }
    BigInt rhs = binomial(j, m - j);
    if (m % 2 != 0) rhs = -rhs;
    return sum == rhs;
}

bool small_index_binomials_vanish(long p) {
    const long half = (p - 1) / 2;
    for (long j = 0; 4 * j < p - 1; ++j) {
        if (binomial(j, half - j) != 0) return false;
    }
    return true;
}

std::vector<IdentityCheck> run_identity_suite(long nmax, long jmax, long mmax, long grid, long vanish_pmax) {
    std::vector<IdentityCheck> out;
    auto tally = [](IdentityCheck& c, bool ok) {
        ++c.cases;
        if (ok) ++c.passed;
    };

    IdentityCheck guo{"guo_identity"};
    for (long n = 0; n <= nmax; ++n) tally(guo, guo_identity_check(n));
    out.push_back(guo);

    for (Family f : {Family::MinusQuarter, Family::MinusSixth, Family::PlusQuarter, Family::PlusSixth}) {
        IdentityCheck c{"product_identity x=" + family_name(f)};
        for (long j = 0; j <= jmax; ++j) tally(c, product_identity_check(f, j));
        out.push_back(c);
    }

    IdentityCheck cv{"chu_vandermonde"};
    for (long m = 0; m <= mmax; ++m) {
        for (long j = 0; j <= m; ++j) tally(cv, chu_vandermonde_check(m, j));
    }
    out.push_back(cv);

    IdentityCheck forms{"delannoy_two_forms"};
    IdentityCheck interp{"d_poly_vs_delannoy_dp"};
    std::vector<RatPolynomial> polys;
    for (long n = 0; n <= grid; ++n) polys.push_back(d_poly(n));
    for (long m = 0; m <= grid; ++m) {
        for (long n = 0; n <= grid; ++n) {
            tally(forms, delannoy_two_forms_check(m, n));
            tally(interp, polys[n](BigRational(m)) == BigRational(delannoy_dp(m, n)));
        }
    }
    out.push_back(forms);
    out.push_back(interp);

    IdentityCheck vanish{"small_index_binomials_vanish"};
    if (vanish_pmax >= 3) {
        for (u64 p : sieve_primes(3, static_cast<u64>(vanish_pmax))) tally(vanish, small_index_binomials_vanish(static_cast<long>(p)));
    }
    out.push_back(vanish);
    return out;
}

}  // namespace dncheck
