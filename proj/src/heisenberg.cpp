#include "hilb/heisenberg.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace hilb {

SurfaceClass excess_class(const SurfaceModel& model, int n) {
    Rat coef = Rat(n) * Rat(n) * Rat(std::abs(n) - 1) / 2;
    return model.c1().scaled(coef);
}

FockVector OperatorCalc::normal_ordered_apply(const std::vector<int>& weights,
                                              const TensorClass& coeffs, const FockVector& v) {
    const std::size_t k = weights.size();
    if (static_cast<int>(k) != coeffs.arity()) throw ArityMismatch("weights vs tensor arity");
    if (k != 2 && k != 3) throw ArityMismatch("normal ordering supports arity 2 or 3");
    for (int w : weights)
        if (w == 0) return FockVector{};  // q_0 = 0

    // slot permutation sorting weights descending (stable)
    std::vector<std::size_t> order(k);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return weights[a] > weights[b]; });

    const SurfaceModel& m = model();
    FockVector out;
    for (const auto& [key, c] : coeffs.terms()) {
        // Koszul sign of the slot permutation on the classes of this term:
        // count odd-odd inversions.
        int sign = 1;
        for (std::size_t a = 0; a < k; ++a)
            for (std::size_t b = a + 1; b < k; ++b)
                if (order[a] > order[b] && m.odd(key[order[a]]) && m.odd(key[order[b]]))
                    sign = -sign;
        // apply rightmost (smallest weight) first
        FockVector cur = v;
        for (std::size_t t = k; t-- > 0 && !cur.is_zero();) {
            std::size_t slot = order[t];
            cur = apply_nakajima(m, weights[slot], m.basis_class(key[slot]), cur);
        }
        out.add(cur, c * sign);
    }
    return out;
}

FockVector OperatorCalc::virasoro(int n, const SurfaceClass& alpha, const FockVector& v) {
    const SurfaceModel& m = model();
    TensorClass diag = m.coproduct(2, alpha);
    // weight bound: annihilation deeper than the top weight of v dies
    int wmax = 0;
    for (const auto& [mono, c] : v.terms()) wmax = std::max(wmax, mono.weight());
    FockVector out;
    for (int nu = -wmax; nu <= n + wmax; ++nu) {
        if (nu == 0 || n - nu == 0) continue;
        if (std::min(nu, n - nu) < -wmax) continue;
        out.add(normal_ordered_apply({nu, n - nu}, diag, v));
    }
    return out.scaled(Rat(1, 2));
}

FockVector OperatorCalc::q_prime(int n, const SurfaceClass& alpha, const FockVector& v) {
    if (n == 0) throw std::invalid_argument("q_prime needs n != 0");
    FockVector out = virasoro(n, alpha, v).scaled(Rat(n));
    Rat corr = Rat(n) * Rat(std::abs(n) - 1) / 2;
    if (!is_zero(corr)) {
        SurfaceClass c1a = model().cup(model().c1(), alpha);
        if (!c1a.is_zero()) out.add(apply_nakajima(model(), n, c1a, v), -corr);
    }
    return out;
}

const FockVector& OperatorCalc::boundary_of_monomial(const Monomial& mono) {
    auto it = boundary_cache_.find(mono);
    if (it != boundary_cache_.end()) return it->second;
    FockVector result;
    if (!mono.factors.empty()) {
        // peel the leading factor: d(q_m(a) w) = q'_m(a) w + q_m(a) d w
        Factor f = mono.factors.front();
        Monomial rest;
        rest.factors.assign(mono.factors.begin() + 1, mono.factors.end());
        FockVector rest_v = FockVector::single(rest);
        SurfaceClass a = model().basis_class(f.idx);
        result = q_prime(f.m, a, rest_v);
        result.add(create(model(), f.m, a, boundary_of_monomial(rest)));
    }
    auto [ins, ok] = boundary_cache_.emplace(mono, std::move(result));
    return ins->second;
}

FockVector OperatorCalc::boundary(const FockVector& v) {
    FockVector out;
    for (const auto& [mono, c] : v.terms()) out.add(boundary_of_monomial(mono), c);
    return out;
}

const RatMatrix& OperatorCalc::boundary_matrix(int n) {
    auto it = boundary_mat_.find(n);
    if (it != boundary_mat_.end()) return it->second;
    const auto& basis = fs_->basis(n);
    RatMatrix mat(basis.size(), basis.size());
    for (std::size_t j = 0; j < basis.size(); ++j) {
        const FockVector& col = boundary_of_monomial(basis[j]);
        for (const auto& [mono, c] : col.terms()) mat.at(fs_->index_of(n, mono), j) = c;
    }
    return boundary_mat_.emplace(n, std::move(mat)).first->second;
}

const RatMatrix& OperatorCalc::creation_matrix(int m, int idx, int n) {
    auto key = std::make_tuple(m, idx, n);
    auto it = creation_mat_.find(key);
    if (it != creation_mat_.end()) return it->second;
    const auto& src = fs_->basis(n);
    RatMatrix mat(fs_->block_dim(n + m), src.size());
    Monomial tmp;
    for (std::size_t j = 0; j < src.size(); ++j) {
        int s = create_monomial(model(), m, idx, src[j], tmp);
        if (s != 0) mat.at(fs_->index_of(n + m, tmp), j) = s;
    }
    return creation_mat_.emplace(key, std::move(mat)).first->second;
}

const RatMatrix& OperatorCalc::q1_derivative_matrix(int k, int idx, int n) {
    auto key = std::make_tuple(k, idx, n);
    auto it = q1deriv_mat_.find(key);
    if (it != q1deriv_mat_.end()) return it->second;
    RatMatrix mat;
    if (k == 0) {
        mat = creation_matrix(1, idx, n);
    } else {
        const RatMatrix& prev = q1_derivative_matrix(k - 1, idx, n);
        mat = boundary_matrix(n + 1) * prev - prev * boundary_matrix(n);
    }
    return q1deriv_mat_.emplace(key, std::move(mat)).first->second;
}

OperatorBlock OperatorCalc::iterated_derivative(int k, int m, const SurfaceClass& alpha, int n) {
    RatMatrix mat(fs_->block_dim(n + m), fs_->block_dim(n));
    for (std::size_t a = 0; a < model().dim(); ++a)
        if (!is_zero(alpha[a])) mat = mat + creation_matrix(m, static_cast<int>(a), n).scaled(alpha[a]);
    for (int i = 0; i < k; ++i) mat = boundary_matrix(n + m) * mat - mat * boundary_matrix(n);
    OperatorBlock blk;
    blk.source_weight = n;
    blk.target_weight = n + m;
    blk.matrix = std::move(mat);
    auto deg = alpha.homogeneous_degree(model());
    blk.parity = deg ? (*deg % 2) : 0;
    return blk;
}

FockVector OperatorCalc::vertex_apply(int m, const SurfaceClass& gamma, const FockVector& v) {
    auto deg = gamma.homogeneous_degree(model());
    if (deg && *deg % 2 != 0) throw OddClassRejected("vertex operators need even classes");
    for (std::size_t i = 0; i < gamma.dim(); ++i)
        if (!is_zero(gamma[i]) && model().odd(static_cast<int>(i)))
            throw OddClassRejected("vertex operators need even classes");
    // coefficient of t^m in exp(sum_{n>0} ((-1)^{n-1}/n) q_n(gamma) t^n):
    // iterate over partitions of m; a part n with multiplicity c contributes
    // ((-1)^{n-1}/n)^c / c!.
    FockVector out;
    std::vector<int> part;
    std::function<void(int, int, const Rat&, const FockVector&)> rec =
        [&](int remaining, int max_part, const Rat& coef, const FockVector& cur) {
            if (remaining == 0) {
                out.add(cur, coef);
                return;
            }
            for (int p = std::min(max_part, remaining); p >= 1; --p) {
                // multiplicities of part p
                Rat c = coef;
                FockVector w = cur;
                Rat unit = Rat(p % 2 == 1 ? 1 : -1, p);
                for (int cnt = 1; cnt * p <= remaining; ++cnt) {
                    c *= unit / cnt;
                    w = create(model(), p, gamma, w);
                    if (w.is_zero()) break;
                    rec(remaining - cnt * p, p - 1, c, w);
                }
            }
        };
    rec(m, m, Rat(1), v);
    return out;
}

FockVector OperatorCalc::vertex_vacuum(int m, const SurfaceClass& gamma) {
    return vertex_apply(m, gamma, FockVector::vacuum());
}

OperatorBlock OperatorCalc::vertex_block(int m, const SurfaceClass& gamma, int n) {
    const auto& src = fs_->basis(n);
    OperatorBlock blk;
    blk.source_weight = n;
    blk.target_weight = n + m;
    blk.matrix = RatMatrix(fs_->block_dim(n + m), src.size());
    for (std::size_t j = 0; j < src.size(); ++j) {
        FockVector col = vertex_apply(m, gamma, FockVector::single(src[j]));
        for (const auto& [mono, c] : col.terms()) blk.matrix.at(fs_->index_of(n + m, mono), j) = c;
    }
    blk.parity = 0;
    return blk;
}

FockVector OperatorCalc::cubic_sum(const FockVector& v) {
    const SurfaceModel& m = model();
    TensorClass delta = m.coproduct(3, m.unit_class());
    int wmax = 0;
    for (const auto& [mono, c] : v.terms()) wmax = std::max(wmax, mono.weight());
    FockVector out;
    for (int l1 = -wmax; l1 <= 2 * wmax; ++l1)
        for (int l2 = -wmax; l2 <= 2 * wmax; ++l2) {
            int l3 = -l1 - l2;
            if (l1 == 0 || l2 == 0 || l3 == 0) continue;
            if (std::min({l1, l2, l3}) < -wmax) continue;
            if (std::max({l1, l2, l3}) > 2 * wmax) continue;
            out.add(normal_ordered_apply({l1, l2, l3}, delta, v));
        }
    return out;
}

namespace {

std::string describe(const SurfaceModel& m, const Monomial& mono, const std::string& what) {
    std::ostringstream os;
    os << what << " at " << mono.str(m);
    return os.str();
}

}  // namespace

RelationReport OperatorCalc::check_relation(const std::string& relation_id, int weight_bound,
                                            int index_bound, std::vector<int> classes) {
    if (classes.empty())
        for (std::size_t i = 0; i < model().dim(); ++i) classes.push_back(static_cast<int>(i));
    if (relation_id == "heisenberg") return check_heisenberg(weight_bound, index_bound, classes);
    if (relation_id == "derivative") return check_derivative(weight_bound, index_bound, classes);
    if (relation_id == "virasoro-q") return check_virasoro_q(weight_bound, index_bound, classes);
    if (relation_id == "cubic-boundary") return check_cubic(weight_bound);
    if (relation_id == "super-jacobi") return check_super_jacobi(weight_bound, index_bound, classes);
    throw std::invalid_argument("unknown relation id: " + relation_id);
}

RelationReport OperatorCalc::check_heisenberg(int W, int I, const std::vector<int>& cls) {
    RelationReport rep;
    rep.relation = "heisenberg";
    const SurfaceModel& m = model();
    std::ostringstream scope;
    scope << "blocks w<=" << W << ", |i|,|j|<=" << I << ", " << cls.size() << " classes";
    rep.detail = scope.str();
    for (int w = 0; w <= W && rep.pass; ++w) {
        for (const Monomial& mono : fs_->basis(w)) {
            FockVector v = FockVector::single(mono);
            for (int i = -I; i <= I && rep.pass; ++i) {
                if (i == 0) continue;
                for (int j = -I; j <= I && rep.pass; ++j) {
                    if (j == 0) continue;
                    for (int a : cls) {
                        SurfaceClass ca = m.basis_class(a);
                        FockVector qa_v = apply_nakajima(m, i, ca, v);
                        for (int b : cls) {
                            SurfaceClass cb = m.basis_class(b);
                            // [q_i(a), q_j(b)] v - i delta (int ab) v
                            FockVector lhs = apply_nakajima(m, i, ca, apply_nakajima(m, j, cb, v));
                            int ks = koszul_sign(m.degree(a), m.degree(b));
                            lhs.add(apply_nakajima(m, j, cb, qa_v), Rat(-ks));
                            if (i + j == 0) {
                                Rat scal = Rat(i) * m.pair_basis(a, b);
                                lhs.add(v, -scal);
                            }
                            if (!lhs.is_zero()) {
                                rep.pass = false;
                                std::ostringstream os;
                                os << "i=" << i << " j=" << j << " a=" << m.basis()[a].name
                                   << " b=" << m.basis()[b].name << " on " << mono.str(m);
                                rep.first_residual = os.str();
                                rep.residual_value = lhs.terms().begin()->second;
                                break;
                            }
                        }
                        if (!rep.pass) break;
                    }
                }
            }
            if (!rep.pass) break;
        }
    }
    return rep;
}

RelationReport OperatorCalc::check_derivative(int W, int I, const std::vector<int>& cls) {
    RelationReport rep;
    rep.relation = "derivative";
    const SurfaceModel& m = model();
    std::ostringstream scope;
    scope << "blocks w<=" << W << ", |n|,|m|<=" << I << ", " << cls.size() << " classes";
    rep.detail = scope.str();
    for (int w = 0; w <= W && rep.pass; ++w) {
        for (const Monomial& mono : fs_->basis(w)) {
            FockVector v = FockVector::single(mono);
            for (int n = -I; n <= I && rep.pass; ++n) {
                if (n == 0) continue;
                for (int mm = -I; mm <= I && rep.pass; ++mm) {
                    if (mm == 0) continue;
                    for (int a : cls) {
                        SurfaceClass ca = m.basis_class(a);
                        for (int b : cls) {
                            SurfaceClass cb = m.basis_class(b);
                            FockVector qb_v = apply_nakajima(m, mm, cb, v);
                            FockVector lhs = q_prime(n, ca, qb_v);
                            int ks = koszul_sign(m.degree(a), m.degree(b));
                            lhs.add(apply_nakajima(m, mm, cb, q_prime(n, ca, v)), Rat(-ks));
                            // rhs: -nm q_{n+m}(ab) + delta (int e_{|n|} a b) id
                            SurfaceClass ab = m.cup(ca, cb);
                            FockVector rhs;
                            if (n + mm != 0)
                                rhs = apply_nakajima(m, n + mm, ab, v).scaled(Rat(-n) * Rat(mm));
                            else {
                                Rat scal = m.integrate(m.cup(excess_class(m, n), ab));
                                rhs = v.scaled(scal);
                            }
                            FockVector diff = lhs - rhs;
                            if (!diff.is_zero()) {
                                rep.pass = false;
                                std::ostringstream os;
                                os << "n=" << n << " m=" << mm << " a=" << m.basis()[a].name
                                   << " b=" << m.basis()[b].name << " on " << mono.str(m);
                                rep.first_residual = os.str();
                                rep.residual_value = diff.terms().begin()->second;
                                break;
                            }
                        }
                        if (!rep.pass) break;
                    }
                }
            }
            if (!rep.pass) break;
        }
    }
    return rep;
}

RelationReport OperatorCalc::check_virasoro_q(int W, int I, const std::vector<int>& cls) {
    RelationReport rep;
    rep.relation = "virasoro-q";
    const SurfaceModel& m = model();
    std::ostringstream scope;
    scope << "blocks w<=" << W << ", |n|,|m|<=" << I << ", " << cls.size() << " classes";
    rep.detail = scope.str();
    for (int w = 0; w <= W && rep.pass; ++w) {
        for (const Monomial& mono : fs_->basis(w)) {
            FockVector v = FockVector::single(mono);
            for (int n = -I; n <= I && rep.pass; ++n) {
                for (int mm = -I; mm <= I && rep.pass; ++mm) {
                    if (mm == 0) continue;
                    for (int a : cls) {
                        SurfaceClass ca = m.basis_class(a);
                        for (int b : cls) {
                            SurfaceClass cb = m.basis_class(b);
                            // [L_n(a), q_m(b)] = -m q_{n+m}(ab)
                            FockVector lhs = virasoro(n, ca, apply_nakajima(m, mm, cb, v));
                            int ks = koszul_sign(m.degree(a), m.degree(b));
                            lhs.add(apply_nakajima(m, mm, cb, virasoro(n, ca, v)), Rat(-ks));
                            FockVector rhs;
                            if (n + mm != 0)
                                rhs = apply_nakajima(m, n + mm, m.cup(ca, cb), v).scaled(Rat(-mm));
                            else {
                                // n = -m: scalar part of the Virasoro bracket
                                // [L_n, q_{-n}] = -(-n) q_0 (null) ... the
                                // n+m = 0 case is excluded from this suite.
                                continue;
                            }
                            FockVector diff = lhs - rhs;
                            if (!diff.is_zero()) {
                                rep.pass = false;
                                std::ostringstream os;
                                os << "n=" << n << " m=" << mm << " a=" << m.basis()[a].name
                                   << " b=" << m.basis()[b].name << " on " << mono.str(m);
                                rep.first_residual = os.str();
                                rep.residual_value = diff.terms().begin()->second;
                                break;
                            }
                        }
                        if (!rep.pass) break;
                    }
                }
            }
            if (!rep.pass) break;
        }
    }
    return rep;
}

RelationReport OperatorCalc::check_cubic(int W) {
    RelationReport rep;
    rep.relation = "cubic-boundary";
    std::ostringstream scope;
    scope << "blocks w<=" << W;
    rep.detail = scope.str();
    for (int w = 0; w <= W; ++w) {
        for (const Monomial& mono : fs_->basis(w)) {
            FockVector v = FockVector::single(mono);
            FockVector lhs = cubic_sum(v).scaled(Rat(-1, 6));
            FockVector rhs = boundary(v);
            FockVector diff = lhs - rhs;
            if (!diff.is_zero()) {
                rep.pass = false;
                rep.first_residual = describe(model(), mono, "cubic formula mismatch");
                rep.residual_value = diff.terms().begin()->second;
                return rep;
            }
        }
    }
    return rep;
}

RelationReport OperatorCalc::check_super_jacobi(int W, int I, const std::vector<int>& cls) {
    RelationReport rep;
    rep.relation = "super-jacobi";
    const SurfaceModel& m = model();
    std::ostringstream scope;
    scope << "blocks w<=" << W << ", |i|<=" << I << ", " << cls.size() << " classes";
    rep.detail = scope.str();
    // [[A,B],C] +- cyclic for A = q_i(a), B = q_j(b), C = q_k(c):
    // (-1)^{|A||C|}[[A,B],C] + (-1)^{|B||A|}[[B,C],A] + (-1)^{|C||B|}[[C,A],B] = 0
    auto bracket = [&](int i, const SurfaceClass& a, int pa, int j, const SurfaceClass& b, int pb,
                       const FockVector& v) {
        FockVector r = apply_nakajima(m, i, a, apply_nakajima(m, j, b, v));
        int ks = (pa && pb) ? -1 : 1;
        r.add(apply_nakajima(m, j, b, apply_nakajima(m, i, a, v)), Rat(-ks));
        return r;
    };
    for (int w = 0; w <= W && rep.pass; ++w) {
        for (const Monomial& mono : fs_->basis(w)) {
            FockVector v = FockVector::single(mono);
            for (int i = -I; i <= I && rep.pass; ++i) {
                if (i == 0) continue;
                for (int j = -I; j <= I && rep.pass; ++j) {
                    if (j == 0) continue;
                    for (int k = -I; k <= I && rep.pass; ++k) {
                        if (k == 0) continue;
                        for (int a : cls)
                            for (int b : cls)
                                for (int c : cls) {
                                    int pa = m.degree(a) % 2, pb = m.degree(b) % 2,
                                        pc = m.degree(c) % 2;
                                    SurfaceClass ca = m.basis_class(a), cb = m.basis_class(b),
                                                 cc = m.basis_class(c);
                                    // [[A,B],C] v
                                    FockVector ab_c =
                                        bracket(i, ca, pa, j, cb, pb, apply_nakajima(m, k, cc, v));
                                    int pab = (pa + pb) % 2;
                                    ab_c.add(apply_nakajima(m, k, cc, bracket(i, ca, pa, j, cb, pb, v)),
                                             Rat(-((pab && pc) ? -1 : 1)));
                                    FockVector bc_a =
                                        bracket(j, cb, pb, k, cc, pc, apply_nakajima(m, i, ca, v));
                                    int pbc = (pb + pc) % 2;
                                    bc_a.add(apply_nakajima(m, i, ca, bracket(j, cb, pb, k, cc, pc, v)),
                                             Rat(-((pbc && pa) ? -1 : 1)));
                                    FockVector ca_b =
                                        bracket(k, cc, pc, i, ca, pa, apply_nakajima(m, j, cb, v));
                                    int pca = (pc + pa) % 2;
                                    ca_b.add(apply_nakajima(m, j, cb, bracket(k, cc, pc, i, ca, pa, v)),
                                             Rat(-((pca && pb) ? -1 : 1)));
                                    FockVector total;
                                    total.add(ab_c, Rat((pa && pc) ? -1 : 1));
                                    total.add(bc_a, Rat((pb && pa) ? -1 : 1));
                                    total.add(ca_b, Rat((pc && pb) ? -1 : 1));
                                    if (!total.is_zero()) {
                                        rep.pass = false;
                                        std::ostringstream os;
                                        os << "i=" << i << " j=" << j << " k=" << k << " on "
                                           << mono.str(m);
                                        rep.first_residual = os.str();
                                        rep.residual_value = total.terms().begin()->second;
                                    }
                                    if (!rep.pass) break;
                                }
                        if (!rep.pass) break;
                    }
                }
            }
            if (!rep.pass) break;
        }
    }
    return rep;
}

}  // namespace hilb
