#include "hilb/surface.hpp"

#include <algorithm>
#include <sstream>

namespace hilb {

bool SurfaceClass::is_zero() const {
    for (const auto& c : coeff_)
        if (!hilb::is_zero(c)) return false;
    return true;
}

SurfaceClass SurfaceClass::operator+(const SurfaceClass& o) const {
    SurfaceClass r(dim());
    for (std::size_t i = 0; i < dim(); ++i) r[i] = coeff_[i] + o[i];
    return r;
}

SurfaceClass SurfaceClass::operator-(const SurfaceClass& o) const {
    SurfaceClass r(dim());
    for (std::size_t i = 0; i < dim(); ++i) r[i] = coeff_[i] - o[i];
    return r;
}

SurfaceClass SurfaceClass::scaled(const Rat& s) const {
    SurfaceClass r(dim());
    for (std::size_t i = 0; i < dim(); ++i) r[i] = coeff_[i] * s;
    return r;
}

std::optional<int> SurfaceClass::homogeneous_degree(const SurfaceModel& m) const {
    std::optional<int> d;
    for (std::size_t i = 0; i < dim(); ++i) {
        if (hilb::is_zero(coeff_[i])) continue;
        if (!d)
            d = m.degree(static_cast<int>(i));
        else if (*d != m.degree(static_cast<int>(i)))
            return std::nullopt;
    }
    return d;
}

void TensorClass::add(const Key& k, const Rat& c) {
    if (hilb::is_zero(c)) return;
    auto it = terms_.find(k);
    if (it == terms_.end()) {
        terms_.emplace(k, c);
    } else {
        it->second += c;
        if (hilb::is_zero(it->second)) terms_.erase(it);
    }
}

TensorClass TensorClass::swap_adjacent(const SurfaceModel& m, int pos) const {
    TensorClass out(arity_);
    for (const auto& [k, c] : terms_) {
        Key kk = k;
        std::swap(kk[pos], kk[pos + 1]);
        int s = koszul_sign(m.degree(k[pos]), m.degree(k[pos + 1]));
        out.add(kk, s > 0 ? c : -c);
    }
    return out;
}

SurfaceClass SurfaceModel::basis_class(int i) const {
    SurfaceClass c(dim());
    c[i] = 1;
    return c;
}

SurfaceClass SurfaceModel::cup(const SurfaceClass& a, const SurfaceClass& b) const {
    SurfaceClass r(dim());
    for (std::size_t i = 0; i < dim(); ++i) {
        if (hilb::is_zero(a[i])) continue;
        for (std::size_t j = 0; j < dim(); ++j) {
            if (hilb::is_zero(b[j])) continue;
            Rat s = a[i] * b[j];
            const auto& pr = product_[i][j];
            for (std::size_t k = 0; k < dim(); ++k)
                if (!hilb::is_zero(pr[k])) r[k] += s * pr[k];
        }
    }
    return r;
}

Rat SurfaceModel::integrate(const SurfaceClass& a) const {
    Rat r = 0;
    for (std::size_t i = 0; i < dim(); ++i)
        if (!hilb::is_zero(a[i])) r += a[i] * integral_[i];
    return r;
}

Rat SurfaceModel::pair(const SurfaceClass& a, const SurfaceClass& b) const {
    return integrate(cup(a, b));
}

SurfaceClass SurfaceModel::dual_basis_class(int i) const {
    SurfaceClass c(dim());
    for (std::size_t j = 0; j < dim(); ++j) c[j] = dual_.at(i, j);
    return c;
}

TensorClass SurfaceModel::coproduct(int arity, const SurfaceClass& a) const {
    if (arity != 2 && arity != 3) throw std::invalid_argument("coproduct arity must be 2 or 3");
    TensorClass t2(2);
    for (std::size_t i = 0; i < dim(); ++i) {
        SurfaceClass ae = cup(a, basis_class(static_cast<int>(i)));
        if (ae.is_zero()) continue;
        for (std::size_t j = 0; j < dim(); ++j) {
            if (hilb::is_zero(ae[j])) continue;
            for (std::size_t k = 0; k < dim(); ++k) {
                const Rat& d = dual_.at(i, k);
                if (!hilb::is_zero(d))
                    t2.add({static_cast<int>(j), static_cast<int>(k), -1}, ae[j] * d);
            }
        }
    }
    if (arity == 2) return t2;
    // (tau2 (x) id) o tau2: expand the first slot again.
    TensorClass t3(3);
    for (const auto& [key, c] : t2.terms()) {
        TensorClass inner = coproduct(2, basis_class(key[0]));
        for (const auto& [ik, ic] : inner.terms())
            t3.add({ik[0], ik[1], key[1]}, c * ic);
    }
    return t3;
}

SurfaceClass SurfaceModel::diagonal_euler_class() const {
    SurfaceClass e(dim());
    TensorClass d = coproduct(2, unit_class());
    for (const auto& [k, c] : d.terms()) {
        const auto& pr = product_[k[0]][k[1]];
        for (std::size_t i = 0; i < dim(); ++i)
            if (!hilb::is_zero(pr[i])) e[i] += c * pr[i];
    }
    return e;
}

int SurfaceModel::basis_index(const std::string& name) const {
    for (std::size_t i = 0; i < dim(); ++i)
        if (basis_[i].name == name) return static_cast<int>(i);
    throw UnknownName("unknown basis class: " + name);
}

namespace {
std::string triple_str(int i, int j, int k) {
    std::ostringstream os;
    os << "(" << i << "," << j << "," << k << ")";
    return os.str();
}
}  // namespace

void SurfaceModel::finalize_and_validate() {
    const std::size_t n = dim();
    if (n == 0) throw GradingViolation("empty basis");
    int units = 0;
    for (std::size_t i = 0; i < n; ++i) {
        int d = basis_[i].degree;
        if (d < 0 || d > 4) throw GradingViolation("degree out of range at basis " + basis_[i].name);
        if (d % 2 != 0) has_odd_ = true;
        if (d == 0) ++units;
    }
    if (units != 1 || basis_[unit_].degree != 0)
        throw GradingViolation("model must have exactly one degree-0 basis element, the unit");
    if (product_.size() != n) throw GradingViolation("product tensor size mismatch");
    for (auto& row : product_) {
        if (row.size() != n) throw GradingViolation("product tensor size mismatch");
        for (auto& e : row)
            if (e.size() != n) throw GradingViolation("product tensor size mismatch");
    }
    if (integral_.size() != n) throw GradingViolation("integral size mismatch");

    // integral supported in degree 4; product respects grading
    for (std::size_t i = 0; i < n; ++i)
        if (!hilb::is_zero(integral_[i]) && basis_[i].degree != 4)
            throw GradingViolation("integral supported outside degree 4 at " + basis_[i].name);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            int dij = basis_[i].degree + basis_[j].degree;
            for (std::size_t k = 0; k < n; ++k)
                if (!hilb::is_zero(product_[i][j][k]) && basis_[k].degree != dij)
                    throw GradingViolation("product violates grading at " +
                                           triple_str((int)i, (int)j, (int)k));
        }

    // unitality
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t k = 0; k < n; ++k) {
            Rat want = (k == i) ? Rat(1) : Rat(0);
            if (product_[unit_][i][k] != want || product_[i][unit_][k] != want)
                throw GradingViolation("product is not unital at basis " + basis_[i].name);
        }
    }

    // graded commutativity on basis elements
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            int s = koszul_sign(basis_[i].degree, basis_[j].degree);
            for (std::size_t k = 0; k < n; ++k) {
                Rat want = product_[j][i][k];
                if (s < 0) want = -want;
                if (product_[i][j][k] != want)
                    throw GradingViolation("product not graded-commutative at " +
                                           triple_str((int)i, (int)j, (int)k));
            }
        }

    // associativity on all basis triples
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k) {
                SurfaceClass ab(dim()), bc(dim());
                for (std::size_t t = 0; t < n; ++t) {
                    ab[t] = product_[i][j][t];
                    bc[t] = product_[j][k][t];
                }
                SurfaceClass l = cup(ab, basis_class((int)k));
                SurfaceClass r = cup(basis_class((int)i), bc);
                if (!(l == r))
                    throw NonAssociative("product not associative at basis triple " +
                                         triple_str((int)i, (int)j, (int)k));
            }

    // pairing and its inverse (dual basis)
    pairing_ = RatMatrix(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            Rat p = 0;
            for (std::size_t k = 0; k < n; ++k)
                if (!hilb::is_zero(product_[i][j][k])) p += product_[i][j][k] * integral_[k];
            pairing_.at(i, j) = p;
        }
    // dual rows D with sum_k D[i][k] * pairing[k][j] = delta_ij, i.e. the
    // defining property integral(e^i * e_j) = delta_ij.
    RatMatrix pt(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) pt.at(i, j) = pairing_.at(j, i);
    RatSolver solver(pt);
    if (solver.singular())
        throw DegeneratePairing("Poincare pairing is singular for model " + name_);
    dual_ = RatMatrix(n, n);
    std::vector<Rat> e(n);
    for (std::size_t i = 0; i < n; ++i) {
        std::fill(e.begin(), e.end(), Rat(0));
        e[i] = 1;
        auto row = solver.solve(e);
        for (std::size_t k = 0; k < n; ++k) dual_.at(i, k) = row[k];
    }

    // Chern data degrees
    if (c1_.dim() != n || c2_.dim() != n) throw GradingViolation("c1/c2 dimension mismatch");
    auto d1 = c1_.homogeneous_degree(*this);
    if (d1 && *d1 != 2) throw GradingViolation("c1 must have degree 2");
    auto d2 = c2_.homogeneous_degree(*this);
    if (d2 && *d2 != 4) throw GradingViolation("c2 must have degree 4");
}

SurfaceModel SurfaceModel::load_surface(const Spec& spec) {
    SurfaceModel m;
    m.name_ = spec.name;
    m.basis_ = spec.basis;
    m.unit_ = spec.unit;
    m.product_ = spec.product;
    m.integral_ = spec.integral;
    m.c1_ = SurfaceClass(spec.basis.size());
    m.c2_ = SurfaceClass(spec.basis.size());
    if (spec.c1.size() != spec.basis.size() || spec.c2.size() != spec.basis.size())
        throw GradingViolation("c1/c2 dimension mismatch");
    for (std::size_t i = 0; i < spec.basis.size(); ++i) {
        m.c1_[i] = spec.c1[i];
        m.c2_[i] = spec.c2[i];
    }
    m.finalize_and_validate();
    return m;
}

namespace {

// Builder helper: accumulate spec data with named classes.
struct SpecBuilder {
    SurfaceModel::Spec spec;
    int add(const std::string& name, int degree) {
        spec.basis.push_back({name, degree});
        return static_cast<int>(spec.basis.size()) - 1;
    }
    void init_tensors() {
        std::size_t n = spec.basis.size();
        spec.product.assign(n, std::vector<std::vector<Rat>>(n, std::vector<Rat>(n, Rat(0))));
        spec.integral.assign(n, Rat(0));
        spec.c1.assign(n, Rat(0));
        spec.c2.assign(n, Rat(0));
        // unital part
        for (std::size_t i = 0; i < n; ++i) {
            spec.product[spec.unit][i][i] = 1;
            spec.product[i][spec.unit][i] = 1;
        }
    }
    // set e_i * e_j = sum coeffs, and the graded-commutative mirror
    void set_product(int i, int j, const std::vector<std::pair<int, Rat>>& val) {
        for (auto& [k, c] : val) {
            spec.product[i][j][k] = c;
            int s = koszul_sign(spec.basis[i].degree, spec.basis[j].degree);
            spec.product[j][i][k] = s > 0 ? c : -c;
        }
    }
};

SurfaceModel build_p2() {
    SpecBuilder b;
    b.spec.name = "p2";
    int one = b.add("1", 0);
    int h = b.add("h", 2);
    int pt = b.add("pt", 4);
    b.spec.unit = one;
    b.init_tensors();
    b.set_product(h, h, {{pt, Rat(1)}});
    b.spec.integral[pt] = 1;
    b.spec.c1[h] = 3;
    b.spec.c2[pt] = 3;
    return SurfaceModel::load_surface(b.spec);
}

SurfaceModel build_p1xp1() {
    SpecBuilder b;
    b.spec.name = "p1xp1";
    int one = b.add("1", 0);
    int a = b.add("a", 2);
    int bb = b.add("b", 2);
    int pt = b.add("pt", 4);
    b.spec.unit = one;
    b.init_tensors();
    b.set_product(a, bb, {{pt, Rat(1)}});
    b.spec.integral[pt] = 1;
    b.spec.c1[a] = 2;
    b.spec.c1[bb] = 2;
    b.spec.c2[pt] = 4;
    return SurfaceModel::load_surface(b.spec);
}

// Exterior algebra on four odd degree-1 generators; basis indexed by
// subsets of {1,2,3,4} with ascending-product convention.
SurfaceModel build_t4() {
    SpecBuilder b;
    b.spec.name = "t4";
    std::vector<std::vector<int>> subsets;
    for (int mask = 0; mask < 16; ++mask) {
        std::vector<int> s;
        for (int g = 0; g < 4; ++g)
            if (mask & (1 << g)) s.push_back(g);
        subsets.push_back(s);
    }
    std::stable_sort(subsets.begin(), subsets.end(),
                     [](const auto& x, const auto& y) { return x.size() < y.size(); });
    std::map<std::vector<int>, int> index;
    for (const auto& s : subsets) {
        std::string name;
        if (s.empty())
            name = "1";
        else
            for (int g : s) name += "a" + std::to_string(g + 1);
        index[s] = b.add(name, static_cast<int>(s.size()));
    }
    b.spec.unit = index[{}];
    b.init_tensors();
    // a_S * a_T = sign * a_{S u T}, sign from sorting the concatenation
    for (const auto& s : subsets)
        for (const auto& t : subsets) {
            if (s.empty() || t.empty()) continue;
            bool disjoint = true;
            for (int g : s)
                if (std::find(t.begin(), t.end(), g) != t.end()) disjoint = false;
            if (!disjoint) continue;
            std::vector<int> cat = s;
            cat.insert(cat.end(), t.begin(), t.end());
            int sign = 1;
            for (std::size_t i = 0; i < cat.size(); ++i)
                for (std::size_t j = i + 1; j < cat.size(); ++j)
                    if (cat[i] > cat[j]) sign = -sign;
            std::vector<int> u = cat;
            std::sort(u.begin(), u.end());
            b.spec.product[index[s]][index[t]][index[u]] = sign;
        }
    b.spec.integral[index[{0, 1, 2, 3}]] = 1;
    return SurfaceModel::load_surface(b.spec);
}

// H^2 = hyperbolic^3 + E8(-1)^2, c1 = 0, c2 = 24 pt.
SurfaceModel build_k3() {
    SpecBuilder b;
    b.spec.name = "k3";
    int one = b.add("1", 0);
    std::vector<std::pair<int, int>> hyp;
    for (int p = 1; p <= 3; ++p) {
        int e = b.add("e" + std::to_string(p), 2);
        int f = b.add("f" + std::to_string(p), 2);
        hyp.emplace_back(e, f);
    }
    std::vector<std::vector<int>> e8(2);
    for (int blk = 0; blk < 2; ++blk)
        for (int i = 1; i <= 8; ++i)
            e8[blk].push_back(b.add("g" + std::to_string(blk + 1) + std::to_string(i), 2));
    int pt = b.add("pt", 4);
    b.spec.unit = one;
    b.init_tensors();
    for (auto [e, f] : hyp) b.set_product(e, f, {{pt, Rat(1)}});
    // E8 Cartan matrix, nodes 1..8, edges per the standard Dynkin diagram
    int cartan[8][8] = {};
    for (int i = 0; i < 8; ++i) cartan[i][i] = 2;
    const int edges[7][2] = {{1, 3}, {3, 4}, {4, 5}, {5, 6}, {6, 7}, {7, 8}, {2, 4}};
    for (auto& e : edges) {
        cartan[e[0] - 1][e[1] - 1] = -1;
        cartan[e[1] - 1][e[0] - 1] = -1;
    }
    for (int blk = 0; blk < 2; ++blk)
        for (int i = 0; i < 8; ++i)
            for (int j = i; j < 8; ++j)
                if (cartan[i][j] != 0)
                    b.set_product(e8[blk][i], e8[blk][j], {{pt, Rat(-cartan[i][j])}});
    b.spec.integral[pt] = 1;
    b.spec.c2[pt] = 24;
    return SurfaceModel::load_surface(b.spec);
}

}  // namespace

SurfaceModel SurfaceModel::make_synthetic(int planes, const SurfaceClass& c1, const Rat& e) {
    if (planes < 1) throw UnknownName("synthetic model needs at least one hyperbolic plane");
    SpecBuilder b;
    b.spec.name = "synthetic";
    int one = b.add("1", 0);
    std::vector<std::pair<int, int>> hyp;
    for (int p = 1; p <= planes; ++p) {
        int ee = b.add("e" + std::to_string(p), 2);
        int ff = b.add("f" + std::to_string(p), 2);
        hyp.emplace_back(ee, ff);
    }
    int pt = b.add("pt", 4);
    b.spec.unit = one;
    b.init_tensors();
    for (auto [ee, ff] : hyp) b.set_product(ee, ff, {{pt, Rat(1)}});
    b.spec.integral[pt] = 1;
    if (c1.dim() != b.spec.basis.size())
        throw GradingViolation("synthetic c1 dimension mismatch");
    for (std::size_t i = 0; i < b.spec.basis.size(); ++i) b.spec.c1[i] = c1[i];
    b.spec.c2[pt] = e;
    return load_surface(b.spec);
}

SurfaceModel SurfaceModel::make_synthetic(int planes, const Rat& k, const Rat& e) {
    // c1 = k (e1 + f1)
    std::size_t dim = 2 + 2 * static_cast<std::size_t>(planes);
    SurfaceClass c1(dim);
    c1[1] = k;
    c1[2] = k;
    return make_synthetic(planes, c1, e);
}

SurfaceModel SurfaceModel::builtin(const std::string& name) {
    if (name == "p2") return build_p2();
    if (name == "p1xp1") return build_p1xp1();
    if (name == "t4") return build_t4();
    if (name == "k3") return build_k3();
    if (name.rfind("synthetic(", 0) == 0 && name.back() == ')') {
        std::string args = name.substr(10, name.size() - 11);
        std::vector<std::string> parts;
        std::istringstream is(args);
        std::string tok;
        while (std::getline(is, tok, ',')) parts.push_back(tok);
        if (parts.size() != 3) throw UnknownName("synthetic(planes,c1,e) takes three arguments");
        int planes = std::stoi(parts[0]);
        return make_synthetic(planes, parse_rat(parts[1]), parse_rat(parts[2]));
    }
    throw UnknownName("unknown surface: " + name);
}

SurfaceModel SurfaceModel::permuted(const std::vector<int>& perm, const std::string& new_name) const {
    const std::size_t n = dim();
    if (perm.size() != n) throw std::invalid_argument("permutation size mismatch");
    std::vector<int> inv(n);
    for (std::size_t i = 0; i < n; ++i) inv[perm[i]] = static_cast<int>(i);
    Spec spec;
    spec.name = new_name;
    spec.basis.resize(n);
    for (std::size_t i = 0; i < n; ++i) spec.basis[i] = basis_[perm[i]];
    spec.unit = inv[unit_];
    spec.product.assign(n, std::vector<std::vector<Rat>>(n, std::vector<Rat>(n, Rat(0))));
    spec.integral.assign(n, Rat(0));
    spec.c1.assign(n, Rat(0));
    spec.c2.assign(n, Rat(0));
    for (std::size_t i = 0; i < n; ++i) {
        spec.integral[i] = integral_[perm[i]];
        spec.c1[i] = c1_[perm[i]];
        spec.c2[i] = c2_[perm[i]];
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k)
                spec.product[i][j][k] = product_[perm[i]][perm[j]][perm[k]];
    }
    return load_surface(spec);
}

}  // namespace hilb
