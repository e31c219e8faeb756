#include "hilb/rational.hpp"

#include <stdexcept>

namespace hilb {

Rat parse_rat(const std::string& s) {
    if (s.empty()) throw std::invalid_argument("empty rational literal");
    try {
        Rat r(s);
        r.canonicalize();
        if (r.get_den() == 0) throw std::invalid_argument("zero denominator");
        return r;
    } catch (const std::invalid_argument&) {
        throw;
    } catch (...) {
        throw std::invalid_argument("bad rational literal: " + s);
    }
}

std::string rat_num_str(const Rat& r) { return r.get_num().get_str(); }
std::string rat_den_str(const Rat& r) { return r.get_den().get_str(); }

std::uint64_t rat_mod(const Rat& r, std::uint64_t p) {
    mpz_class num = r.get_num() % mpz_class(p);
    mpz_class den = r.get_den() % mpz_class(p);
    std::uint64_t n = mpz_class(num + p).get_ui() % p;
    std::uint64_t d = mpz_class(den).get_ui() % p;
    if (d == 0) throw std::runtime_error("denominator vanishes mod p");
    // d^(p-2) mod p
    std::uint64_t inv = 1, base = d, e = p - 2;
    auto mulmod = [p](std::uint64_t a, std::uint64_t b) {
        return static_cast<std::uint64_t>((__uint128_t)a * b % p);
    };
    while (e) {
        if (e & 1) inv = mulmod(inv, base);
        base = mulmod(base, base);
        e >>= 1;
    }
    return static_cast<std::uint64_t>((__uint128_t)n * inv % p);
}

}  // namespace hilb
