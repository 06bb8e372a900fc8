#pragma once

// Every congruence of the main theorem and of its proof as a checkable unit.
// Each verify_* function evaluates both sides for one prime and returns a
// VerificationRecord; domain violations are thrown, and verify_statement
// turns them into out-of-domain records.

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "dncheck/exact.hpp"
#include "dncheck/modp.hpp"

namespace dncheck {

enum class StatementId {
    MAIN1,
    MAIN2,
    MAIN3_LITERAL,
    MAIN3_ADJUSTED,
    MAIN4,
    DSQUARE_X,
    CENTRAL_REDUCTION,
    VANISHING_RANGE,
    QUARTER_EVAL,
    BCDE_MODP2,
    FINAL_REDUCTION,
    CONJ_ZERO_MODP2,
    SUN_ALTERNATING,
};

inline constexpr std::array<StatementId, 13> kAllStatements = {
    StatementId::MAIN1,           StatementId::MAIN2,          StatementId::MAIN3_LITERAL,
    StatementId::MAIN3_ADJUSTED,  StatementId::MAIN4,          StatementId::DSQUARE_X,
    StatementId::CENTRAL_REDUCTION, StatementId::VANISHING_RANGE, StatementId::QUARTER_EVAL,
    StatementId::BCDE_MODP2,      StatementId::FINAL_REDUCTION, StatementId::CONJ_ZERO_MODP2,
    StatementId::SUN_ALTERNATING,
};

std::string_view to_string(StatementId id);
std::optional<StatementId> parse_statement(std::string_view name);
/// Statements that take a rational argument x (one record per x).
bool takes_argument(StatementId id);

/// A small rational a/b, used as a p-adic integer when p does not divide b.
struct SmallRational {
    i64 num = 0;
    i64 den = 1;

    /// Accepts "a" or "a/b"; normalizes the sign into the numerator.
    static std::optional<SmallRational> parse(std::string_view text);
    std::string to_string() const;
    bool operator==(const SmallRational&) const = default;
};

/// The x values used for DSQUARE_X / SUN_ALTERNATING when none are given.
std::vector<SmallRational> default_arguments();

enum class Verdict { Ok, Failed, OutOfDomain };

struct VerificationRecord {
    StatementId statement = StatementId::MAIN1;
    u64 p = 0;
    int e = 1;
    std::optional<u64> lhs;
    std::optional<u64> rhs;
    bool ok = false;
    bool out_of_domain = false;
    std::string note;

    Verdict verdict() const {
        if (out_of_domain) return Verdict::OutOfDomain;
        return ok ? Verdict::Ok : Verdict::Failed;
    }
};

/// sum_{k<p} C(2k,k)/4^k d_k(x)^2 mod p^e in O(p).
Residue lhs_sum(i64 x_num, i64 x_den, const Modulus& mod);

/// 2 (-1)^((p-1)/4) x with p = x^2 + y^2, x = 1 (mod 4); 0 for p = 3 (mod 4).
Residue rhs_main1(u64 p);
/// 0 for p = 1 (mod 4); (-1)^((p+1)/4) C((p-1)/2, (p-3)/4) as displayed.
Residue rhs_main3(u64 p);
/// rhs_main3 with the opposite sign on the p = 3 (mod 4) branch.
Residue rhs_main3_adjusted(u64 p);

/// which in 1..4; MAIN3 is recorded as MAIN3_LITERAL. Throws OutOfDomain for
/// p = 3 (which 2, 4) and p = 5 (which 4).
VerificationRecord verify_main(int which, u64 p);
VerificationRecord verify_main3_adjusted(u64 p);

/// (-1)^((p-1)/2) sum_{j<=(p-1)/2} C(x,j) C(x+j,j) C(j,(p-1)/2-j) 4^j mod p.
Residue dsquare_rhs(const SmallRational& x, u64 p);
VerificationRecord verify_dsqure_x(const SmallRational& x, u64 p);

/// C(2k,k)/4^k against (-1)^k C((p-1)/2,k) (k <= (p-1)/2) and 0 (k above).
VerificationRecord verify_central_reduction(u64 p);

/// C(x,j) C(x+j,j) = 0 (mod p) over the stated j range for one family. For
/// x = 1/4 and p = 3 (mod 4) also checks that j = (p+1)/4 is a unit, using
/// the closed form in valuated arithmetic. Throws OutOfDomain for the x = -1/6
/// and 1/6 families at p = 3.
VerificationRecord verify_vanishing_ranges(u64 p, Family family);
/// All families applicable at p, merged into one record.
VerificationRecord verify_vanishing_ranges(u64 p);

/// lhs_sum at x = -1/4 and 1/4 against the closed forms in central binomials.
VerificationRecord verify_quarter_evaluations(u64 p);

/// C((p-1)/2,(p-1)/4) = (2^(p-1)+1)/2 (2x - p/(2x)) mod p^2, together with
/// the mod p corollary C((p-1)/2,(p-1)/4) = 2x. Throws WrongResidueClass
/// unless p = 1 (mod 4).
VerificationRecord verify_bcde(u64 p);

/// (4p+2) C(p+1,(p+1)/2) C((p+1)/2,(p+1)/4) / (4p 16^((p+1)/4)) against
/// C((p-1)/2,(p-3)/4) mod p. The note says whether the value matches the
/// right side, its negation, or neither. Throws WrongResidueClass unless
/// p = 3 (mod 4).
VerificationRecord verify_final_reduction(u64 p);

/// lhs_sum(-1/6) against p/3 (p|3) (4 (-2|p) - 1) mod p^2. p > 3.
VerificationRecord verify_conjecture_zero(u64 p);

/// sum_{k<p} (-1)^k d_k(x)^2 against (-1)^<x>_p mod p^2.
VerificationRecord verify_sun_alternating(const SmallRational& x, u64 p);

/// Least nonnegative r with r = x (mod p).
u64 residue_index(i64 x_num, i64 x_den, u64 p);

/// Runs one statement at one prime, converting domain errors into
/// out-of-domain records. Argument-taking statements emit one record per x.
std::vector<VerificationRecord> verify_statement(StatementId id, u64 p,
                                                 const std::vector<SmallRational>& xs);

}  // namespace dncheck
