#pragma once

#include <cstddef>
#include <string>

#include <gmpxx.h>

namespace mulprob {

// Arbitrary-precision naturals and rationals. All probabilities in the
// library are exact `Rational`s in lowest terms; gmpxx keeps results of
// arithmetic canonical, `make_rational` canonicalizes explicit fractions.
using Natural = mpz_class;
using Rational = mpq_class;

Rational make_rational(long numerator, unsigned long denominator = 1);
Rational make_rational(const Natural& numerator, const Natural& denominator);

// r^e by repeated squaring on numerator and denominator separately.
Rational pow(const Rational& r, std::size_t e);

// Lowest-terms "p/q"; integers keep the "/1".
std::string to_string(const Rational& r);
std::string to_string(const Natural& n);

Natural factorial(std::size_t n);

// C(n, k); zero when k > n.
Natural binomial(std::size_t n, std::size_t k);

// Number of k-sized multisets over an n-element set, C(n+k-1, k).
// Throws DomainError for n == 0 with k > 0.
Natural multichoose(std::size_t n, std::size_t k);

// Factorials and binomials for arguments up to the cap are served from a
// shared, mutex-guarded table; larger arguments are computed directly.
std::size_t memo_cap();
void set_memo_cap(std::size_t cap);

// Enumeration budget read from MULPROB_MAX_CELLS (unset: 50'000'000).
// `check_cells` throws ResourceError if `cells` exceeds it.
std::size_t max_cells();
void check_cells(const Natural& cells, const char* what);

}  // namespace mulprob
