#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

namespace ztile {

// Exact rational scalar. mpq_class keeps every value canonical (lowest
// terms, positive denominator) after arithmetic; no rounding anywhere.
using Rat = mpq_class;
using Int = mpz_class;
using RatVec = std::vector<Rat>;

// Accepts "p", "-p", "p/q" with arbitrary-precision integer p, q != 0.
// Anything else (floats included) throws std::invalid_argument.
Rat parse_rat(const std::string& text);

// Lossless "p/q" string, or "p" when the denominator is 1.
std::string rat_str(const Rat& q);

// Canonicalizing constructor from a num/den pair.
Rat rat_from(const Int& num, const Int& den);

inline int sgn(const Rat& q) { return mpq_sgn(q.get_mpq_t()); }
inline bool is_integral(const Rat& q) { return q.get_den() == 1; }

Rat dot(const RatVec& a, const RatVec& b);
bool is_zero(const RatVec& v);
RatVec scaled(const RatVec& v, const Rat& c);
RatVec sub(const RatVec& a, const RatVec& b);
std::vector<std::string> vec_str(const RatVec& v);

}  // namespace ztile
