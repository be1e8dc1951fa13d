#ifndef IVPOLY_RATIONAL_HPP
#define IVPOLY_RATIONAL_HPP

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace ivpoly {

// Exact scalars. Rat is always kept canonical: gcd(|num|, den) = 1,
// den >= 1, zero is 0/1. gmp arithmetic preserves canonical form; the
// factory below canonicalizes explicitly constructed fractions.
using Int = mpz_class;
using Rat = mpq_class;

// num/den as a canonical fraction. Throws std::domain_error on den == 0.
Rat make_rat(const Int& num, const Int& den);

inline bool is_integer(const Rat& q) { return q.get_den() == 1; }

// Integer value of an integral rational. Throws std::domain_error otherwise.
Int to_int(const Rat& q);

std::string to_string(const Int& n);

// "a" when integral, "a/b" otherwise.
std::string to_string(const Rat& q);

// Parses "a" or "a/b" with optional leading sign. Throws ParseError.
Rat parse_rat(std::string_view text);

} // namespace ivpoly

#endif
