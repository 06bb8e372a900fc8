#pragma once

#include <stdexcept>
#include <string>

namespace dncheck {

// Base of every failure raised by the library. Each subclass corresponds to
// one named error condition of the verification engine.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

#define DNCHECK_DEFINE_ERROR(Name)                                   \
    class Name : public Error {                                      \
    public:                                                          \
        explicit Name(const std::string& what) : Error(#Name ": " + what) {} \
    }

DNCHECK_DEFINE_ERROR(NotPrime);
DNCHECK_DEFINE_ERROR(ModulusMismatch);
DNCHECK_DEFINE_ERROR(NotInvertible);
DNCHECK_DEFINE_ERROR(DenominatorDivisibleByP);
DNCHECK_DEFINE_ERROR(DivisionByExactZero);
DNCHECK_DEFINE_ERROR(NegativeValuation);
DNCHECK_DEFINE_ERROR(IndexTooLarge);
DNCHECK_DEFINE_ERROR(NonResidue);
DNCHECK_DEFINE_ERROR(WrongResidueClass);
DNCHECK_DEFINE_ERROR(OutOfDomain);
DNCHECK_DEFINE_ERROR(UsageError);

#undef DNCHECK_DEFINE_ERROR

}  // namespace dncheck
