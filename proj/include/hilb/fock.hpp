#pragma once

#include <map>
#include <string>
#include <vector>

#include "hilb/surface.hpp"

namespace hilb {

/// One creation factor q_m(e_idx), m >= 1.
struct Factor {
    int m;
    int idx;
    bool operator==(const Factor& o) const { return m == o.m && idx == o.idx; }
    // canonical order: m descending, then idx ascending
    bool operator<(const Factor& o) const {
        if (m != o.m) return m > o.m;
        return idx < o.idx;
    }
};

/// Canonical Nakajima creation monomial applied to the vacuum.
/// Invariants: factors sorted canonically; no repeated odd factor.
struct Monomial {
    std::vector<Factor> factors;

    int weight() const {
        int w = 0;
        for (const auto& f : factors) w += f.m;
        return w;
    }
    int degree(const SurfaceModel& m) const {
        int d = 0;
        for (const auto& f : factors) d += m.degree(f.idx) + 2 * (f.m - 1);
        return d;
    }
    bool operator==(const Monomial& o) const { return factors == o.factors; }
    bool operator<(const Monomial& o) const;

    std::string str(const SurfaceModel& m) const;
};

/// Exact-rational element of the Fock space in the canonical monomial basis.
class FockVector {
public:
    std::map<Monomial, Rat>& terms() { return terms_; }
    const std::map<Monomial, Rat>& terms() const { return terms_; }

    bool is_zero() const { return terms_.empty(); }
    void add(const Monomial& m, const Rat& c);
    void add(const FockVector& v, const Rat& scale = Rat(1));
    FockVector operator+(const FockVector& o) const;
    FockVector operator-(const FockVector& o) const;
    FockVector scaled(const Rat& s) const;
    bool operator==(const FockVector& o) const { return terms_ == o.terms_; }

    static FockVector vacuum();
    static FockVector single(Monomial m, Rat c = Rat(1));

    std::string str(const SurfaceModel& m) const;

private:
    std::map<Monomial, Rat> terms_;
};

/// Canonicalizes a raw word of creation factors: sorts with Koszul signs,
/// kills words with a repeated odd factor. Returns the sign, or 0.
int normalize_word(const SurfaceModel& model, std::vector<Factor>& word);

/// q_m(alpha) v for m >= 1; linear in alpha and v.
FockVector create(const SurfaceModel& model, int m, const SurfaceClass& alpha,
                  const FockVector& v);
/// q_{-m}(alpha) v for m >= 1, via the Heisenberg relation
/// [q_i(a), q_j(b)] = i delta_{i+j,0} (integral ab) id with i = -m.
FockVector annihilate(const SurfaceModel& model, int m, const SurfaceClass& alpha,
                      const FockVector& v);
/// q_n with the sign convention n>0 create / n<0 annihilate.
FockVector apply_nakajima(const SurfaceModel& model, int n, const SurfaceClass& alpha,
                          const FockVector& v);

/// Fast single-monomial creation: q_m(e_idx) mono. Returns sign 0 if the
/// result dies (odd square).
int create_monomial(const SurfaceModel& model, int m, int idx, const Monomial& mono,
                    Monomial& out);

/// Per-model Fock bookkeeping: basis enumeration and index maps are memoized;
/// everything is immutable once computed so concurrent reads are safe after
/// warm-up.
class FockSpace {
public:
    explicit FockSpace(const SurfaceModel& model) : model_(&model) {}
    const SurfaceModel& model() const { return *model_; }

    /// All canonical monomials of weight n, in deterministic order.
    const std::vector<Monomial>& basis(int n);
    std::size_t block_dim(int n);
    std::size_t block_dim(int n, int d);
    /// Position of a monomial in basis(n); monomial must be canonical.
    std::size_t index_of(int n, const Monomial& m);

    /// Dense coordinates of v in basis(n); v must be homogeneous of weight n.
    std::vector<Rat> coordinates(int n, const FockVector& v);
    FockVector from_coordinates(int n, const std::vector<Rat>& coords);

    /// Unit of H*(X^[n]): (1/n!) q_1(1)^n vacuum.
    FockVector unit(int n);

private:
    const SurfaceModel* model_;
    std::map<int, std::vector<Monomial>> basis_;
    std::map<int, std::map<Monomial, std::size_t>> index_;
};

/// Parses "q2(h) q1(1)" against the model's basis names.
Monomial parse_monomial(const SurfaceModel& model, const std::string& text);
/// Parses "3/2 q2(h) q1(1); -1 q1(pt)" (terms separated by ';').
FockVector parse_fock_vector(const SurfaceModel& model, const std::string& text);

}  // namespace hilb
