#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <gmpxx.h>

namespace hall2p {

using Int = mpz_class;

/* Counting |Hom| spaces produces values like q^20; everything that counts
 * set sizes goes through arbitrary-precision integers. */
inline Int int_pow(const Int& base, unsigned long e)
{
    Int r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
    return r;
}

inline Int int_pow(unsigned long base, unsigned long e)
{
    Int r;
    mpz_ui_pow_ui(r.get_mpz_t(), base, e);
    return r;
}

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/* An enumeration would exceed the configured guard.  Carries the offending
 * size so suite drivers can report the skip instead of dropping it. */
struct GuardExceeded : Error {
    GuardExceeded(const std::string& what, const Int& size_)
        : Error(what + " (size " + size_.get_str() + ")"), size(size_) {}
    Int size;
};

/* A checked identity failed.  The message carries the witness. */
struct VerificationError : Error {
    using Error::Error;
};

struct ConfigError : Error {
    using Error::Error;
};

} // namespace hall2p
