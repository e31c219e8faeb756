#pragma once

#include <array>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "hilb/linalg.hpp"
#include "hilb/rational.hpp"

namespace hilb {

// Validation and lookup failures carry the offending data in the message.
struct DegeneratePairing : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct NonAssociative : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct GradingViolation : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct UnknownName : std::runtime_error {
    using std::runtime_error::runtime_error;
};

class SurfaceModel;

/// Element of H*(X,Q) in the basis of its model; dense over a small basis.
class SurfaceClass {
public:
    SurfaceClass() = default;
    explicit SurfaceClass(std::size_t dim) : coeff_(dim) {}

    std::size_t dim() const { return coeff_.size(); }
    const Rat& operator[](std::size_t i) const { return coeff_[i]; }
    Rat& operator[](std::size_t i) { return coeff_[i]; }

    bool is_zero() const;
    SurfaceClass operator+(const SurfaceClass& o) const;
    SurfaceClass operator-(const SurfaceClass& o) const;
    SurfaceClass scaled(const Rat& s) const;
    bool operator==(const SurfaceClass& o) const { return coeff_ == o.coeff_; }

    /// Degree if homogeneous, nullopt for 0 or mixed classes.
    std::optional<int> homogeneous_degree(const SurfaceModel& m) const;

private:
    std::vector<Rat> coeff_;
};

/// Element of H*(X)^{tensor 2 or 3}: rational combination of basis tuples.
/// Tuples are positional; swapping two adjacent factors of a term costs the
/// Koszul sign (-1)^{|a||b|}.
class TensorClass {
public:
    explicit TensorClass(int arity = 2) : arity_(arity) {}
    int arity() const { return arity_; }

    using Key = std::array<int, 3>;  // unused slot = -1
    std::map<Key, Rat>& terms() { return terms_; }
    const std::map<Key, Rat>& terms() const { return terms_; }

    void add(const Key& k, const Rat& c);
    bool operator==(const TensorClass& o) const {
        return arity_ == o.arity_ && terms_ == o.terms_;
    }

    /// Swaps factors at slots (pos, pos+1) of every term, with Koszul signs.
    TensorClass swap_adjacent(const SurfaceModel& m, int pos) const;

private:
    int arity_;
    std::map<Key, Rat> terms_;
};

struct BasisElement {
    std::string name;
    int degree = 0;
};

/// A graded Frobenius algebra model of H*(X,Q) for a closed four-manifold,
/// with the Chern data c1, c2. Immutable once built; all invariants are
/// checked eagerly by the factory functions.
class SurfaceModel {
public:
    /// Raw description; validated by load_surface.
    struct Spec {
        std::string name;
        std::vector<BasisElement> basis;
        int unit = 0;
        // product[i][j] = class of e_i * e_j (dense over basis)
        std::vector<std::vector<std::vector<Rat>>> product;
        std::vector<Rat> integral;
        std::vector<Rat> c1, c2;
    };

    static SurfaceModel load_surface(const Spec& spec);
    /// k3, t4, p2, p1xp1 or synthetic via make_synthetic.
    static SurfaceModel builtin(const std::string& name);
    /// planes hyperbolic summands in H^2, c1 = c1_coeffs over that basis,
    /// c2 = e * pt. Not required to be geometrically realizable.
    static SurfaceModel make_synthetic(int planes, const SurfaceClass& c1, const Rat& e);
    static SurfaceModel make_synthetic(int planes, const Rat& c1_hyperbolic_multiple,
                                       const Rat& e);

    const std::string& name() const { return name_; }
    std::size_t dim() const { return basis_.size(); }
    const std::vector<BasisElement>& basis() const { return basis_; }
    int degree(int i) const { return basis_[i].degree; }
    bool odd(int i) const { return basis_[i].degree % 2 != 0; }
    bool has_odd_classes() const { return has_odd_; }
    int unit_index() const { return unit_; }

    SurfaceClass zero_class() const { return SurfaceClass(dim()); }
    SurfaceClass basis_class(int i) const;
    SurfaceClass unit_class() const { return basis_class(unit_); }
    const SurfaceClass& c1() const { return c1_; }
    const SurfaceClass& c2() const { return c2_; }
    bool c1_is_zero() const { return c1_.is_zero(); }

    SurfaceClass cup(const SurfaceClass& a, const SurfaceClass& b) const;
    const std::vector<Rat>& cup_basis(int i, int j) const { return product_[i][j]; }
    Rat integrate(const SurfaceClass& a) const;
    Rat integrate_basis(int i) const { return integral_[i]; }
    /// <a,b> = integral(a*b)
    Rat pair(const SurfaceClass& a, const SurfaceClass& b) const;
    Rat pair_basis(int i, int j) const { return pairing_.at(i, j); }

    /// Kuenneth diagonal: arity 2 gives sum_i (a*e_i) (x) e^i with the dual
    /// basis normalized by integral(e^i * e_j) = delta_ij; arity 3 iterates
    /// on the first slot. Coassociative; counit identities hold exactly.
    TensorClass coproduct(int arity, const SurfaceClass& a) const;

    /// Dual basis element e^i as a class.
    SurfaceClass dual_basis_class(int i) const;

    /// Looks a basis element up by name.
    int basis_index(const std::string& name) const;

    /// Euler class from the pairing: m(coproduct(2,1)) = sum_i e_i e^i.
    SurfaceClass diagonal_euler_class() const;

    /// Transport along a permutation of basis indices: basis[i] of the new
    /// model is basis[perm[i]] of this one, all tensors relabeled.
    SurfaceModel permuted(const std::vector<int>& perm, const std::string& new_name) const;

private:
    SurfaceModel() = default;
    void finalize_and_validate();

    std::string name_;
    std::vector<BasisElement> basis_;
    int unit_ = 0;
    std::vector<std::vector<std::vector<Rat>>> product_;
    std::vector<Rat> integral_;
    SurfaceClass c1_, c2_;
    RatMatrix pairing_;
    RatMatrix dual_;  // row i = coordinates of e^i
    bool has_odd_ = false;
};

inline int koszul_sign(int deg_a, int deg_b) {
    return (deg_a % 2 != 0 && deg_b % 2 != 0) ? -1 : 1;
}

}  // namespace hilb
