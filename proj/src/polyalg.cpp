#include "sepvar/polyalg.hpp"

#include <algorithm>

#include "sepvar/errors.hpp"

namespace sepvar {

std::string var_name(VarId v) {
    std::string prefix = is_R(v) ? "R" : "x";
    return prefix + std::to_string(var_first(v)) + std::to_string(var_second(v));
}

std::string var_latex(VarId v) {
    std::string prefix = is_R(v) ? "r" : "x";
    return prefix + "_{" + std::to_string(var_first(v)) + std::to_string(var_second(v)) + "}";
}

Monomial::Monomial(std::vector<std::pair<VarId, int>> factors) : factors_(std::move(factors)) {
    std::sort(factors_.begin(), factors_.end());
    size_t w = 0;
    for (size_t i = 0; i < factors_.size(); ++i) {
        if (factors_[i].second < 0) throw InputError("negative exponent");
        if (factors_[i].second == 0) continue;
        if (w > 0 && factors_[w - 1].first == factors_[i].first)
            factors_[w - 1].second += factors_[i].second;
        else
            factors_[w++] = factors_[i];
    }
    factors_.resize(w);
}

int Monomial::degree() const {
    int d = 0;
    for (const auto& [v, e] : factors_) d += e;
    return d;
}

int Monomial::degree_R() const {
    int d = 0;
    for (const auto& [v, e] : factors_)
        if (is_R(v)) d += e;
    return d;
}

int Monomial::degree_x() const { return degree() - degree_R(); }

int Monomial::exponent(VarId v) const {
    for (const auto& [var, e] : factors_)
        if (var == v) return e;
    return 0;
}

bool Monomial::has_R() const {
    return !factors_.empty() && is_R(factors_.front().first);
}

Monomial Monomial::operator*(const Monomial& o) const {
    std::vector<std::pair<VarId, int>> f(factors_);
    f.insert(f.end(), o.factors_.begin(), o.factors_.end());
    return Monomial(std::move(f));
}

std::pair<Monomial, Monomial> Monomial::split() const {
    std::vector<std::pair<VarId, int>> r, x;
    for (const auto& fac : factors_)
        (is_R(fac.first) ? r : x).push_back(fac);
    return {Monomial(std::move(r)), Monomial(std::move(x))};
}

long long Monomial::row_count(int i) const {
    long long c = 0;
    for (const auto& [v, e] : factors_) {
        if (is_R(v))
            c += static_cast<long long>(e) * ((var_first(v) == i) + (var_second(v) == i));
        else if (var_first(v) == i)
            c += e;
    }
    return c;
}

bool GrlexGreater::operator()(const Monomial& a, const Monomial& b) const {
    int da = a.degree(), db = b.degree();
    if (da != db) return da > db;
    // Lexicographic: walk both sparse factor lists; the monomial with a
    // higher exponent on the earliest differing variable is greater.
    const auto& fa = a.factors();
    const auto& fb = b.factors();
    size_t i = 0, j = 0;
    while (i < fa.size() && j < fb.size()) {
        if (fa[i].first < fb[j].first) return true;   // a has the earlier variable
        if (fa[i].first > fb[j].first) return false;
        if (fa[i].second != fb[j].second) return fa[i].second > fb[j].second;
        ++i;
        ++j;
    }
    return i < fa.size();
}

MPoly MPoly::constant(const Rat& c) {
    MPoly p;
    p.add_term(Monomial(), c);
    return p;
}

MPoly MPoly::variable(VarId v) {
    MPoly p;
    p.add_term(Monomial({{v, 1}}), Rat(1));
    return p;
}

MPoly MPoly::term(const Monomial& m, const Rat& c) {
    MPoly p;
    p.add_term(m, c);
    return p;
}

int MPoly::degree() const {
    int d = 0;
    for (const auto& [m, c] : terms_) d = std::max(d, m.degree());
    return d;
}

bool MPoly::has_R() const {
    for (const auto& [m, c] : terms_)
        if (m.has_R()) return true;
    return false;
}

void MPoly::add_term(const Monomial& m, const Rat& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

MPoly MPoly::operator+(const MPoly& o) const {
    MPoly out(*this);
    out += o;
    return out;
}

MPoly& MPoly::operator+=(const MPoly& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
}

MPoly MPoly::operator-(const MPoly& o) const { return *this + o.scaled(Rat(-1)); }

MPoly MPoly::operator*(const MPoly& o) const {
    MPoly out;
    for (const auto& [ma, ca] : terms_)
        for (const auto& [mb, cb] : o.terms_) out.add_term(ma * mb, ca * cb);
    return out;
}

MPoly MPoly::scaled(const Rat& c) const {
    MPoly out;
    if (c == 0) return out;
    for (const auto& [m, coef] : terms_) out.terms_.emplace(m, coef * c);
    return out;
}

MPoly MPoly::derivative(VarId v) const {
    MPoly out;
    for (const auto& [m, c] : terms_) {
        int e = m.exponent(v);
        if (e == 0) continue;
        std::vector<std::pair<VarId, int>> f;
        for (const auto& fac : m.factors()) {
            if (fac.first == v)
                f.emplace_back(v, fac.second - 1);
            else
                f.push_back(fac);
        }
        out.add_term(Monomial(std::move(f)), c * e);
    }
    return out;
}

namespace {

std::string render(const MPoly& p, bool latex) {
    if (p.is_zero()) return "0";
    std::string out;
    for (const auto& [m, c] : p.terms()) {
        bool neg = c < 0;
        Rat a = neg ? Rat(-c) : c;
        if (out.empty()) {
            if (neg) out += "-";
        } else {
            out += neg ? " - " : " + ";
        }
        std::string factors;
        for (const auto& [v, e] : m.factors()) {
            if (!factors.empty() && !latex) factors += "*";
            factors += latex ? var_latex(v) : var_name(v);
            if (e > 1) factors += latex ? "^{" + std::to_string(e) + "}" : "^" + std::to_string(e);
        }
        if (factors.empty())
            out += rat_to_string(a);
        else if (a == 1)
            out += factors;
        else
            out += rat_to_string(a) + (latex ? " " : "*") + factors;
    }
    return out;
}

}  // namespace

std::string MPoly::to_string() const { return render(*this, false); }
std::string MPoly::to_latex() const { return render(*this, true); }

std::map<Monomial, MPoly, GrlexGreater> TensorElement::grouped_by_x() const {
    std::map<Monomial, MPoly, GrlexGreater> out;
    for (const auto& [m, c] : poly.terms()) {
        auto [r, x] = m.split();
        out[x].add_term(r, c);
    }
    return out;
}

std::map<Monomial, MPoly, GrlexGreater> TensorElement::grouped_by_R() const {
    std::map<Monomial, MPoly, GrlexGreater> out;
    for (const auto& [m, c] : poly.terms()) {
        auto [r, x] = m.split();
        out[r].add_term(x, c);
    }
    return out;
}

int TensorElement::min_degree_R() const {
    int best = -1;
    for (const auto& [m, c] : poly.terms()) {
        int d = m.degree_R();
        if (best < 0 || d < best) best = d;
    }
    return best;
}

MPoly r_eval(int i, int j, int n, int k) {
    if (i < 1 || j < i || j > k) throw InputError("r_eval requires 1 <= i <= j <= k");
    MPoly out;
    for (int l = 1; l <= n; ++l)
        out.add_term(Monomial({{var_x(i, l), 1}}) * Monomial({{var_x(j, n + 1 - l), 1}}), Rat(1));
    return out;
}

MPoly laplacian(int a, int b, const MPoly& p, int n, int k) {
    if (a < 1 || b < a || b > k) throw InputError("laplacian requires 1 <= a <= b <= k");
    if (p.has_R()) throw InputError("laplacian applies to R-free polynomials only");
    MPoly out;
    for (int l = 1; l <= n; ++l)
        out += p.derivative(var_x(a, l)).derivative(var_x(b, n + 1 - l));
    return out;
}

MPoly h_action_x(int s, int t, const MPoly& p, int n, int k) {
    if (s < 1 || s > k || t < 1 || t > k) throw InputError("h_action_x index out of range");
    if (p.has_R()) throw InputError("h_action_x applies to R-free polynomials only");
    MPoly out;
    for (int l = 1; l <= n; ++l)
        out += MPoly::variable(var_x(s, l)) * p.derivative(var_x(t, l));
    if (s == t) out += p.scaled(Rat(n) / 2);
    return out;
}

namespace {

// Determinant of the j x j bottom-right corner of the k x n variable matrix.
MPoly corner_minor(int j, int n, int k) {
    // Leibniz expansion over permutations; j <= min(n,k) stays small.
    std::vector<int> cols(static_cast<size_t>(j));
    for (int c = 0; c < j; ++c) cols[static_cast<size_t>(c)] = n - j + 1 + c;
    MPoly out;
    std::vector<int> perm(cols.begin(), cols.end());
    std::sort(perm.begin(), perm.end());
    do {
        int sign = 1;
        for (size_t a = 0; a < perm.size(); ++a)
            for (size_t b = a + 1; b < perm.size(); ++b)
                if (perm[a] > perm[b]) sign = -sign;
        std::vector<std::pair<VarId, int>> f;
        for (int r = 0; r < j; ++r)
            f.emplace_back(var_x(k - j + 1 + r, perm[static_cast<size_t>(r)]), 1);
        out.add_term(Monomial(std::move(f)), Rat(sign));
    } while (std::next_permutation(perm.begin(), perm.end()));
    return out;
}

}  // namespace

MPoly delta_sigma(const Partition& sigma, int n, int k) {
    int m = std::min(n, k);
    if (sigma.depth() > m)
        throw InputError("delta_sigma requires depth(sigma) <= min(n,k)");
    MPoly out = MPoly::constant(Rat(1));
    for (int j = 1; j <= m; ++j) {
        int a = sigma.part(j) - sigma.part(j + 1);
        MPoly dj = corner_minor(j, n, k);
        for (int e = 0; e < a; ++e) out = out * dj;
    }
    return out;
}

MPoly phi(const TensorElement& T, int n) {
    MPoly out;
    for (const auto& [m, c] : T.poly.terms()) {
        auto [r, x] = m.split();
        MPoly prod = MPoly::term(x, c);
        for (const auto& [v, e] : r.factors()) {
            MPoly rp = r_eval(var_first(v), var_second(v), n, var_second(v));
            for (int q = 0; q < e; ++q) prod = prod * rp;
        }
        out += prod;
    }
    return out;
}

TensorElement h_action_tensor(int s, int t, const TensorElement& T, int n) {
    MPoly out;
    for (const auto& [m, c] : T.poly.terms()) {
        auto [r, x] = m.split();
        // Bracket derivation across the R-part:
        // [h_st, r_ab] = delta_ta r_sb + delta_tb r_as.
        for (const auto& [v, e] : r.factors()) {
            int a = var_first(v), b = var_second(v);
            std::vector<std::pair<VarId, int>> rest;
            for (const auto& fac : r.factors())
                rest.emplace_back(fac.first, fac.first == v ? fac.second - 1 : fac.second);
            Monomial base = Monomial(std::move(rest)) * x;
            if (t == a)
                out.add_term(base * Monomial({{var_R(std::min(s, b), std::max(s, b)), 1}}),
                             c * e);
            if (t == b)
                out.add_term(base * Monomial({{var_R(std::min(a, s), std::max(a, s)), 1}}),
                             c * e);
        }
        // Derivation part of h_st on the x-part.
        for (int l = 1; l <= n; ++l) {
            MPoly dx = MPoly::term(x, c).derivative(var_x(t, l));
            if (dx.is_zero()) continue;
            out += MPoly::term(r * Monomial({{var_x(s, l), 1}}), Rat(1)) * dx;
        }
    }
    // The (n/2) delta_st scalar, exactly once per term.
    if (s == t) out += T.poly.scaled(Rat(n) / 2);
    return TensorElement{out};
}

Weight weight_of(const TensorElement& T, int n, int k) {
    if (T.is_zero()) throw NotWeightVectorError("weight_of(0) is undefined");
    std::vector<long long> twice(static_cast<size_t>(k));
    bool first = true;
    for (const auto& [m, c] : T.poly.terms()) {
        for (int i = 1; i <= k; ++i) {
            long long eig_twice = 2 * m.row_count(i) + n;
            long long coord = -eig_twice;
            if (first)
                twice[static_cast<size_t>(i - 1)] = coord;
            else if (twice[static_cast<size_t>(i - 1)] != coord)
                throw NotWeightVectorError("terms have different h_" + std::to_string(i) +
                                           std::to_string(i) + " eigenvalues");
        }
        first = false;
    }
    return Weight::from_twice(std::move(twice));
}

bool is_harmonic(const MPoly& p, int n, int k) {
    for (int a = 1; a <= k; ++a)
        for (int b = a; b <= k; ++b)
            if (!laplacian(a, b, p, n, k).is_zero()) return false;
    return true;
}

bool is_hw_tensor(const TensorElement& T, int n, int k) {
    for (int t = 1; t <= k; ++t)
        for (int s = t + 1; s <= k; ++s)
            if (!h_action_tensor(s, t, T, n).is_zero()) return false;
    return true;
}

bool is_zero_in_IH(const TensorElement& T, int n, int k) {
    for (const auto& [x, q] : T.grouped_by_x()) {
        (void)x;
        if (!phi(TensorElement{q}, n).is_zero()) return false;
    }
    (void)k;
    return true;
}

}  // namespace sepvar
