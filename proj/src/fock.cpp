#include "hilb/fock.hpp"

#include <algorithm>
#include <sstream>

namespace hilb {

bool Monomial::operator<(const Monomial& o) const {
    if (factors.size() != o.factors.size()) return factors.size() < o.factors.size();
    for (std::size_t i = 0; i < factors.size(); ++i) {
        if (factors[i].m != o.factors[i].m) return factors[i].m > o.factors[i].m;
        if (factors[i].idx != o.factors[i].idx) return factors[i].idx < o.factors[i].idx;
    }
    return false;
}

std::string Monomial::str(const SurfaceModel& m) const {
    if (factors.empty()) return "|0>";
    std::ostringstream os;
    for (std::size_t i = 0; i < factors.size(); ++i) {
        if (i) os << " ";
        os << "q" << factors[i].m << "(" << m.basis()[factors[i].idx].name << ")";
    }
    return os.str();
}

void FockVector::add(const Monomial& m, const Rat& c) {
    if (hilb::is_zero(c)) return;
    auto it = terms_.find(m);
    if (it == terms_.end()) {
        terms_.emplace(m, c);
    } else {
        it->second += c;
        if (hilb::is_zero(it->second)) terms_.erase(it);
    }
}

void FockVector::add(const FockVector& v, const Rat& scale) {
    if (hilb::is_zero(scale)) return;
    for (const auto& [m, c] : v.terms_) add(m, c * scale);
}

FockVector FockVector::operator+(const FockVector& o) const {
    FockVector r = *this;
    r.add(o);
    return r;
}

FockVector FockVector::operator-(const FockVector& o) const {
    FockVector r = *this;
    r.add(o, Rat(-1));
    return r;
}

FockVector FockVector::scaled(const Rat& s) const {
    FockVector r;
    if (hilb::is_zero(s)) return r;
    for (const auto& [m, c] : terms_) r.terms_.emplace(m, c * s);
    return r;
}

FockVector FockVector::vacuum() {
    FockVector v;
    v.terms_.emplace(Monomial{}, Rat(1));
    return v;
}

FockVector FockVector::single(Monomial m, Rat c) {
    FockVector v;
    if (!hilb::is_zero(c)) v.terms_.emplace(std::move(m), std::move(c));
    return v;
}

std::string FockVector::str(const SurfaceModel& m) const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [mono, c] : terms_) {
        if (!first) os << " + ";
        os << "(" << c.get_str() << ") " << mono.str(m);
        first = false;
    }
    return os.str();
}

int normalize_word(const SurfaceModel& model, std::vector<Factor>& word) {
    // insertion sort; each adjacent swap of two odd factors flips the sign
    int sign = 1;
    for (std::size_t i = 1; i < word.size(); ++i) {
        std::size_t j = i;
        while (j > 0 && word[j] < word[j - 1]) {
            if (model.odd(word[j].idx) && model.odd(word[j - 1].idx)) sign = -sign;
            std::swap(word[j], word[j - 1]);
            --j;
        }
    }
    for (std::size_t i = 1; i < word.size(); ++i)
        if (word[i] == word[i - 1] && model.odd(word[i].idx)) return 0;
    return sign;
}

int create_monomial(const SurfaceModel& model, int m, int idx, const Monomial& mono,
                    Monomial& out) {
    // insert (m, idx) at its canonical position; Koszul sign for every odd
    // factor it passes
    Factor nf{m, idx};
    int sign = 1;
    bool odd_new = model.odd(idx);
    std::size_t pos = 0;
    for (; pos < mono.factors.size(); ++pos) {
        const Factor& f = mono.factors[pos];
        if (nf < f || nf == f) break;
        if (odd_new && model.odd(f.idx)) sign = -sign;
    }
    if (pos < mono.factors.size() && mono.factors[pos] == nf && odd_new) return 0;
    out.factors.clear();
    out.factors.reserve(mono.factors.size() + 1);
    out.factors.insert(out.factors.end(), mono.factors.begin(), mono.factors.begin() + pos);
    out.factors.push_back(nf);
    out.factors.insert(out.factors.end(), mono.factors.begin() + pos, mono.factors.end());
    return sign;
}

FockVector create(const SurfaceModel& model, int m, const SurfaceClass& alpha,
                  const FockVector& v) {
    if (m < 1) throw std::invalid_argument("create needs m >= 1");
    FockVector out;
    Monomial tmp;
    for (const auto& [mono, c] : v.terms()) {
        for (std::size_t a = 0; a < model.dim(); ++a) {
            if (hilb::is_zero(alpha[a])) continue;
            int s = create_monomial(model, m, static_cast<int>(a), mono, tmp);
            if (s != 0) out.add(tmp, c * alpha[a] * s);
        }
    }
    return out;
}

FockVector annihilate(const SurfaceModel& model, int m, const SurfaceClass& alpha,
                      const FockVector& v) {
    if (m < 1) throw std::invalid_argument("annihilate needs m >= 1");
    FockVector out;
    for (const auto& [mono, c] : v.terms()) {
        // commute q_{-m}(alpha) to the right past each creation factor
        int sign = 1;
        bool odd_alpha = false;
        // alpha may be inhomogeneous only if all parities agree; handle per
        // basis component to keep Koszul signs exact.
        for (std::size_t a = 0; a < model.dim(); ++a) {
            if (hilb::is_zero(alpha[a])) continue;
            sign = 1;
            odd_alpha = model.odd(static_cast<int>(a));
            for (std::size_t i = 0; i < mono.factors.size(); ++i) {
                const Factor& f = mono.factors[i];
                if (f.m == m) {
                    // [q_{-m}(e_a), q_m(e_f)] = -m * integral(e_a e_f)
                    Rat scal = model.pair_basis(static_cast<int>(a), f.idx);
                    if (!hilb::is_zero(scal)) {
                        Monomial rest;
                        rest.factors.reserve(mono.factors.size() - 1);
                        for (std::size_t j = 0; j < mono.factors.size(); ++j)
                            if (j != i) rest.factors.push_back(mono.factors[j]);
                        out.add(rest, c * alpha[a] * scal * Rat(-m) * sign);
                    }
                }
                if (odd_alpha && model.odd(f.idx)) sign = -sign;
            }
        }
    }
    return out;
}

FockVector apply_nakajima(const SurfaceModel& model, int n, const SurfaceClass& alpha,
                          const FockVector& v) {
    if (n == 0) return FockVector{};
    return n > 0 ? create(model, n, alpha, v) : annihilate(model, -n, alpha, v);
}

namespace {

// Canonical order: weights weakly descending; among equal weights indices
// weakly ascending, strictly for odd classes (odd creations square to zero).
void enumerate_rec(const SurfaceModel& model, int remaining, int last_m, int last_idx,
                   Monomial& cur, std::vector<Monomial>& out) {
    if (remaining == 0) {
        out.push_back(cur);
        return;
    }
    for (int m = std::min(last_m, remaining); m >= 1; --m) {
        int start = (m == last_m) ? last_idx : 0;
        for (int idx = start; idx < static_cast<int>(model.dim()); ++idx) {
            if (m == last_m && idx == last_idx && model.odd(idx)) continue;
            cur.factors.push_back({m, idx});
            enumerate_rec(model, remaining - m, m, idx, cur, out);
            cur.factors.pop_back();
        }
    }
}

}  // namespace

const std::vector<Monomial>& FockSpace::basis(int n) {
    auto it = basis_.find(n);
    if (it != basis_.end()) return it->second;
    std::vector<Monomial> out;
    Monomial cur;
    enumerate_rec(*model_, n, n + 1, 0, cur, out);
    std::sort(out.begin(), out.end());
    auto& slot = basis_[n];
    slot = std::move(out);
    auto& idxmap = index_[n];
    for (std::size_t i = 0; i < slot.size(); ++i) idxmap.emplace(slot[i], i);
    return slot;
}

std::size_t FockSpace::block_dim(int n) { return basis(n).size(); }

std::size_t FockSpace::block_dim(int n, int d) {
    std::size_t cnt = 0;
    for (const auto& m : basis(n))
        if (m.degree(*model_) == d) ++cnt;
    return cnt;
}

std::size_t FockSpace::index_of(int n, const Monomial& m) {
    basis(n);
    const auto& idx = index_.at(n);
    auto it = idx.find(m);
    if (it == idx.end()) throw std::runtime_error("monomial not in block basis");
    return it->second;
}

std::vector<Rat> FockSpace::coordinates(int n, const FockVector& v) {
    std::vector<Rat> c(block_dim(n));
    for (const auto& [mono, coeff] : v.terms()) c[index_of(n, mono)] = coeff;
    return c;
}

FockVector FockSpace::from_coordinates(int n, const std::vector<Rat>& coords) {
    const auto& b = basis(n);
    FockVector v;
    for (std::size_t i = 0; i < coords.size(); ++i)
        if (!hilb::is_zero(coords[i])) v.add(b[i], coords[i]);
    return v;
}

FockVector FockSpace::unit(int n) {
    FockVector v = FockVector::vacuum();
    for (int i = 0; i < n; ++i) v = create(*model_, 1, model_->unit_class(), v);
    Rat fact = 1;
    for (int i = 2; i <= n; ++i) fact *= i;
    return v.scaled(Rat(1) / fact);
}

Monomial parse_monomial(const SurfaceModel& model, const std::string& text) {
    std::vector<Factor> word;
    std::size_t i = 0;
    while (i < text.size()) {
        if (std::isspace(static_cast<unsigned char>(text[i]))) {
            ++i;
            continue;
        }
        if (text[i] != 'q') throw std::invalid_argument("expected 'q' in monomial: " + text);
        ++i;
        std::size_t j = i;
        while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) ++j;
        if (j == i) throw std::invalid_argument("missing weight in monomial: " + text);
        int m = std::stoi(text.substr(i, j - i));
        if (j >= text.size() || text[j] != '(')
            throw std::invalid_argument("expected '(' in monomial: " + text);
        std::size_t close = text.find(')', j);
        if (close == std::string::npos)
            throw std::invalid_argument("expected ')' in monomial: " + text);
        std::string name = text.substr(j + 1, close - j - 1);
        word.push_back({m, model.basis_index(name)});
        i = close + 1;
    }
    int sign = normalize_word(model, word);
    if (sign == 0) throw std::invalid_argument("monomial vanishes (odd square): " + text);
    if (sign < 0)
        throw std::invalid_argument("monomial not in canonical order (sign -1): " + text);
    Monomial mono;
    mono.factors = std::move(word);
    return mono;
}

FockVector parse_fock_vector(const SurfaceModel& model, const std::string& text) {
    FockVector v;
    std::istringstream is(text);
    std::string term;
    while (std::getline(is, term, ';')) {
        std::size_t b = term.find_first_not_of(" \t");
        if (b == std::string::npos) continue;
        term = term.substr(b);
        Rat coeff = 1;
        if (term[0] != 'q') {
            std::size_t sp = term.find_first_of(" \t");
            std::string lead = term.substr(0, sp);
            coeff = parse_rat(lead);
            term = sp == std::string::npos ? "" : term.substr(sp);
        }
        std::vector<Factor> word;
        if (!term.empty()) {
            Monomial m = parse_monomial(model, term);
            word = m.factors;
        }
        Monomial mono;
        mono.factors = std::move(word);
        v.add(mono, coeff);
    }
    return v;
}

}  // namespace hilb
