#pragma once

#include <functional>
#include <optional>
#include <string>

#include "hilb/fock.hpp"
#include "hilb/linalg.hpp"

namespace hilb {

struct ArityMismatch : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct OddClassRejected : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Matrix of a linear operator between weight blocks in the canonical
/// Nakajima basis. parity tracks the degree shift mod 2.
struct OperatorBlock {
    int source_weight = 0;
    int target_weight = 0;
    std::optional<int> source_degree;  // set when restricted to one degree slice
    RatMatrix matrix;                  // block_dim(target) x block_dim(source)
    int parity = 0;                    // degree shift mod 2
};

/// e_n = (1/2) n^2 (|n|-1) c1(X); the excess class of the derivative
/// relation for symplectic fourfolds.
SurfaceClass excess_class(const SurfaceModel& model, int n);

/// Report of a relation verification; failure carries the first nonzero
/// residual entry for diagnosis.
struct RelationReport {
    bool pass = true;
    std::string relation;
    std::string detail;       // scope actually checked
    std::string first_residual;  // empty when pass
    Rat residual_value = 0;
};

/// Operator calculus over one model's Fock space. Memoizes the boundary
/// operator per monomial and creation/derivative matrices per block; caches
/// are write-once, so concurrent reads after warm-up are safe.
class OperatorCalc {
public:
    explicit OperatorCalc(FockSpace& fs) : fs_(&fs) {}
    FockSpace& fock() { return *fs_; }
    const SurfaceModel& model() const { return fs_->model(); }

    /// :q_{w1}...q_{wk}:(coeffs) v with the physicists' convention:
    /// creations leftmost (weights sorted descending in composition order),
    /// Koszul signs from permuting odd tensor slots; q_0 = 0.
    FockVector normal_ordered_apply(const std::vector<int>& weights, const TensorClass& coeffs,
                                    const FockVector& v);

    /// Virasoro operator L_n(alpha) = (1/2) sum_nu :q_nu q_{n-nu}:(tau2* alpha).
    FockVector virasoro(int n, const SurfaceClass& alpha, const FockVector& v);

    /// q'_n(alpha) = n L_n(alpha) - (1/2) n (|n|-1) q_n(c1 alpha), n != 0.
    FockVector q_prime(int n, const SurfaceClass& alpha, const FockVector& v);

    /// Boundary operator: d|0> = 0, d(q_m(a) w) = q'_m(a) w + q_m(a) d w.
    FockVector boundary(const FockVector& v);
    const FockVector& boundary_of_monomial(const Monomial& m);

    /// ad(d)^k q_m(alpha) restricted to the weight-n block.
    OperatorBlock iterated_derivative(int k, int m, const SurfaceClass& alpha, int n);

    /// S_m(gamma)|0> for even gamma, from the exponential generating series.
    FockVector vertex_vacuum(int m, const SurfaceClass& gamma);
    /// S_m(gamma) applied to v.
    FockVector vertex_apply(int m, const SurfaceClass& gamma, const FockVector& v);
    /// S_m(gamma) on the weight-n block.
    OperatorBlock vertex_block(int m, const SurfaceClass& gamma, int n);

    /// sum_{l1+l2+l3=0} :qqq:(delta_X) v (all l_i nonzero).
    FockVector cubic_sum(const FockVector& v);

    /// Matrices (memoized): boundary and creation per weight block.
    const RatMatrix& boundary_matrix(int n);
    const RatMatrix& creation_matrix(int m, int idx, int n);  // q_m(e_idx): n -> n+m
    /// q_1^{(k)}(e_idx) as a matrix on the weight-n block (n -> n+1).
    const RatMatrix& q1_derivative_matrix(int k, int idx, int n);

    /// Named relation suites. weight_bound caps the blocks tested,
    /// index_bound the Nakajima indices; classes restricts the basis-class
    /// arguments (empty = full basis).
    RelationReport check_relation(const std::string& relation_id, int weight_bound,
                                  int index_bound = 3, std::vector<int> classes = {});

private:
    FockSpace* fs_;
    std::map<Monomial, FockVector> boundary_cache_;
    std::map<int, RatMatrix> boundary_mat_;
    std::map<std::tuple<int, int, int>, RatMatrix> creation_mat_;
    std::map<std::tuple<int, int, int>, RatMatrix> q1deriv_mat_;

    RelationReport check_heisenberg(int W, int I, const std::vector<int>& cls);
    RelationReport check_derivative(int W, int I, const std::vector<int>& cls);
    RelationReport check_virasoro_q(int W, int I, const std::vector<int>& cls);
    RelationReport check_cubic(int W);
    RelationReport check_super_jacobi(int W, int I, const std::vector<int>& cls);
};

}  // namespace hilb
