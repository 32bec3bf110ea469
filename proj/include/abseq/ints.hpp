#ifndef ABSEQ_INTS_HPP
#define ABSEQ_INTS_HPP

#include <gmpxx.h>
#include <vector>
#include <string>

namespace abseq {

// The engine works over exact integers throughout; intermediate entries of
// normal-form computations can blow up far past 64 bits, so everything is
// arbitrary precision.
using Int = mpz_class;
using IntVec = std::vector<Int>;

inline Int int_abs(const Int& a) { return a < 0 ? Int(-a) : a; }

inline Int int_gcd(const Int& a, const Int& b) { return gcd(a, b); }

inline int int_sign(const Int& a) { return sgn(a); }

// a / b when b | a; asserts exact divisibility.
inline Int divexact(const Int& a, const Int& b)
{
    Int q, r;
    mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    if (r != 0)
        throw std::runtime_error("divexact: not divisible");
    return q;
}

// Canonical representative of a mod m in [0, m); m = 0 means no reduction.
inline Int mod_canonical(const Int& a, const Int& m)
{
    if (m == 0)
        return a;
    Int r;
    mpz_mod(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
    return r;
}

inline long to_long_checked(const Int& a)
{
    if (!a.fits_slong_p())
        throw std::runtime_error("integer too large for serialization: " + a.get_str());
    return a.get_si();
}

} // namespace abseq

#endif
