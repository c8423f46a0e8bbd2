#ifndef NEARRING_ERRORS_HPP
#define NEARRING_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace nearring {

// Base class for all domain errors thrown by the library.
struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

#define NEARRING_DEFINE_ERROR(Name)                                  \
    struct Name : Error {                                            \
        explicit Name(const std::string& msg = #Name) : Error(msg) {}\
    }

NEARRING_DEFINE_ERROR(NotPrime);
NEARRING_DEFINE_ERROR(ReducibleModulus);
NEARRING_DEFINE_ERROR(NoSuchOrder);
NEARRING_DEFINE_ERROR(ZeroElement);
NEARRING_DEFINE_ERROR(NotCoprime);
NEARRING_DEFINE_ERROR(NonRationalProduct);
NEARRING_DEFINE_ERROR(ZeroPolynomial);
NEARRING_DEFINE_ERROR(TrivialInput);
NEARRING_DEFINE_ERROR(OddK);
NEARRING_DEFINE_ERROR(NotCircular);
NEARRING_DEFINE_ERROR(KNotDividingQMinus1);
NEARRING_DEFINE_ERROR(ZeroRadius);
NEARRING_DEFINE_ERROR(ZeroInput);
NEARRING_DEFINE_ERROR(NonPalindromic);
NEARRING_DEFINE_ERROR(WorkLimitExceeded);

#undef NEARRING_DEFINE_ERROR

} // namespace nearring

#endif
