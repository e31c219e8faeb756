#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace hilb {

/// Exact rational scalar used throughout. All computations in this library
/// are exact; no floating point is ever introduced.
using Rat = mpq_class;

inline Rat rat(long num, long den = 1) {
    Rat r(num, den);
    r.canonicalize();
    return r;
}

inline bool is_zero(const Rat& r) { return sgn(r) == 0; }

inline std::string rat_str(const Rat& r) { return r.get_str(); }

/// Parses "a/b" or "a"; throws std::invalid_argument on junk.
Rat parse_rat(const std::string& s);

/// num/den as strings for JSON emission (den always positive).
std::string rat_num_str(const Rat& r);
std::string rat_den_str(const Rat& r);

/// Reduction of a rational mod a word-sized prime; used for fast rank
/// certificates. Throws if the denominator vanishes mod p.
std::uint64_t rat_mod(const Rat& r, std::uint64_t p);

}  // namespace hilb
