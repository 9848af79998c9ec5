#include "sepvar/roots.hpp"

#include <algorithm>
#include <numeric>

#include "sepvar/errors.hpp"

namespace sepvar {

namespace {

// Classifies the vector as one of the three admissible shapes; the indices of
// the (up to two) nonzero entries together with their values determine it.
struct Shape {
    int nonzeros = 0;
    int i = 0, j = 0;  // 1-based positions of nonzero entries
    int vi = 0, vj = 0;
};

Shape classify(const std::vector<int>& v) {
    Shape s;
    for (size_t p = 0; p < v.size(); ++p) {
        if (v[p] == 0) continue;
        ++s.nonzeros;
        if (s.nonzeros == 1) {
            s.i = static_cast<int>(p) + 1;
            s.vi = v[p];
        } else if (s.nonzeros == 2) {
            s.j = static_cast<int>(p) + 1;
            s.vj = v[p];
        }
    }
    return s;
}

bool valid_shape(const Shape& s) {
    if (s.nonzeros == 1) return s.vi == 2 || s.vi == -2;           // +-2e_i
    if (s.nonzeros == 2) {
        if (s.vi == 1 && s.vj == -1) return true;                  // e_i - e_j
        if (s.vi == -1 && s.vj == 1) return true;
        if (s.vi == 1 && s.vj == 1) return true;                   // e_i + e_j
        if (s.vi == -1 && s.vj == -1) return true;
    }
    return false;
}

}  // namespace

Root::Root(std::vector<int> v) : v_(std::move(v)) {
    if (!valid_shape(classify(v_))) throw InputError("vector is not an sp(2k) root");
}

Root Root::compact(int i, int j, int k) {
    std::vector<int> v(static_cast<size_t>(k), 0);
    v.at(static_cast<size_t>(i - 1)) += 1;
    v.at(static_cast<size_t>(j - 1)) -= 1;
    return Root(std::move(v));
}

Root Root::noncompact_short(int i, int j, int k) {
    std::vector<int> v(static_cast<size_t>(k), 0);
    v.at(static_cast<size_t>(i - 1)) += 1;
    v.at(static_cast<size_t>(j - 1)) += 1;
    return Root(std::move(v));
}

Root Root::noncompact_long(int i, int k) {
    std::vector<int> v(static_cast<size_t>(k), 0);
    v.at(static_cast<size_t>(i - 1)) = 2;
    return Root(std::move(v));
}

Root Root::negated() const {
    std::vector<int> v(v_);
    for (int& x : v) x = -x;
    return Root(std::move(v));
}

bool Root::is_compact() const {
    Shape s = classify(v_);
    return s.nonzeros == 2 && s.vi + s.vj == 0;
}

bool Root::is_long() const {
    Shape s = classify(v_);
    return s.nonzeros == 1;
}

bool Root::is_short_noncompact() const {
    Shape s = classify(v_);
    return s.nonzeros == 2 && (s.vi + s.vj == 2 || s.vi + s.vj == -2);
}

bool Root::is_positive() const {
    for (int x : v_) {
        if (x > 0) return true;
        if (x < 0) return false;
    }
    return false;
}

std::string Root::to_string() const {
    std::string out;
    for (size_t p = 0; p < v_.size(); ++p) {
        int c = v_[p];
        if (c == 0) continue;
        std::string term;
        if (c == 1)
            term = "e" + std::to_string(p + 1);
        else if (c == -1)
            term = "-e" + std::to_string(p + 1);
        else if (c == 2)
            term = "2e" + std::to_string(p + 1);
        else
            term = "-2e" + std::to_string(p + 1);
        if (!out.empty() && c > 0) out += "+";
        out += term;
    }
    return out;
}

SignedPermutation::SignedPermutation(int k)
    : perm_(static_cast<size_t>(k)), signs_(static_cast<size_t>(k), 1) {
    std::iota(perm_.begin(), perm_.end(), 0);
}

SignedPermutation::SignedPermutation(std::vector<int> perm, std::vector<int> signs)
    : perm_(std::move(perm)), signs_(std::move(signs)) {
    if (perm_.size() != signs_.size()) throw InputError("perm/signs length mismatch");
}

SignedPermutation SignedPermutation::reflection(const Root& alpha) {
    int k = alpha.size();
    SignedPermutation w(k);
    Shape s = classify(alpha.vec());
    if (s.nonzeros == 1) {
        // s_{2e_i}: negate coordinate i.
        w.signs_[static_cast<size_t>(s.i - 1)] = -1;
    } else if (s.vi + s.vj == 0) {
        // s_{e_i - e_j}: swap coordinates i, j.
        std::swap(w.perm_[static_cast<size_t>(s.i - 1)], w.perm_[static_cast<size_t>(s.j - 1)]);
    } else {
        // s_{e_i + e_j}: swap and negate.
        std::swap(w.perm_[static_cast<size_t>(s.i - 1)], w.perm_[static_cast<size_t>(s.j - 1)]);
        w.signs_[static_cast<size_t>(s.i - 1)] = -1;
        w.signs_[static_cast<size_t>(s.j - 1)] = -1;
    }
    return w;
}

Weight SignedPermutation::apply(const Weight& w) const {
    if (w.size() != size()) throw InputError("weight length mismatch");
    std::vector<long long> t(static_cast<size_t>(size()));
    for (size_t i = 0; i < t.size(); ++i)
        t[i] = signs_[i] * w.twice_coords()[static_cast<size_t>(perm_[i])];
    return Weight::from_twice(std::move(t));
}

Root SignedPermutation::apply(const Root& r) const {
    if (r.size() != size()) throw InputError("root length mismatch");
    std::vector<int> v(static_cast<size_t>(size()));
    for (size_t i = 0; i < v.size(); ++i)
        v[i] = signs_[i] * r.vec()[static_cast<size_t>(perm_[i])];
    return Root(std::move(v));
}

SignedPermutation SignedPermutation::compose(const SignedPermutation& v) const {
    if (size() != v.size()) throw InputError("size mismatch");
    std::vector<int> perm(static_cast<size_t>(size()));
    std::vector<int> signs(static_cast<size_t>(size()));
    for (size_t i = 0; i < perm.size(); ++i) {
        perm[i] = v.perm_[static_cast<size_t>(perm_[i])];
        signs[i] = signs_[i] * v.signs_[static_cast<size_t>(perm_[i])];
    }
    return SignedPermutation(std::move(perm), std::move(signs));
}

std::vector<Root> compact_positive(int k) {
    std::vector<Root> out;
    for (int i = 1; i <= k; ++i)
        for (int j = i + 1; j <= k; ++j) out.push_back(Root::compact(i, j, k));
    return out;
}

std::vector<Root> noncompact_positive(int k) {
    std::vector<Root> out;
    for (int i = 1; i <= k; ++i)
        for (int j = i + 1; j <= k; ++j) out.push_back(Root::noncompact_short(i, j, k));
    for (int i = 1; i <= k; ++i) out.push_back(Root::noncompact_long(i, k));
    return out;
}

std::vector<Root> positive_roots(int k) {
    std::vector<Root> out = compact_positive(k);
    auto nc = noncompact_positive(k);
    out.insert(out.end(), nc.begin(), nc.end());
    return out;
}

std::vector<Root> all_roots(int k) {
    std::vector<Root> out = positive_roots(k);
    size_t half = out.size();
    for (size_t i = 0; i < half; ++i) out.push_back(out[i].negated());
    return out;
}

Weight rho(int k) {
    // Computed literally as half the sum of positive roots.
    std::vector<long long> total(static_cast<size_t>(k), 0);
    for (const Root& r : positive_roots(k))
        for (int i = 0; i < k; ++i) total[static_cast<size_t>(i)] += r.vec()[static_cast<size_t>(i)];
    return Weight::from_twice(std::move(total));
}

Rat inner(const Weight& mu, const Root& alpha) {
    if (mu.size() != alpha.size()) throw InputError("length mismatch");
    long long twice = 0;
    for (int i = 1; i <= mu.size(); ++i)
        twice += mu.twice(i) * alpha.coeff(i);
    return rat_of(twice) / 2;
}

Rat pairing(const Weight& mu, const Root& alpha) {
    long norm2 = 0;
    for (int c : alpha.vec()) norm2 += static_cast<long>(c) * c;
    Rat p = inner(mu, alpha) * 2;
    p /= norm2;
    p.canonicalize();
    return p;
}

Weight reflect(const Weight& mu, const Root& alpha) {
    Rat p = pairing(mu, alpha) * 2;  // doubled pairing is always an integer here
    if (!is_integer(p)) throw InputError("reflection of a weight with non-half-integral pairing");
    long long p2 = p.get_num().get_si();
    std::vector<long long> t(mu.twice_coords());
    for (int i = 1; i <= mu.size(); ++i)
        t[static_cast<size_t>(i - 1)] -= p2 * alpha.coeff(i);
    return Weight::from_twice(std::move(t));
}

Weight dominant_sort(const Weight& mu) {
    std::vector<long long> t(mu.twice_coords());
    std::sort(t.begin(), t.end(), std::greater<long long>());
    return Weight::from_twice(std::move(t));
}

bool dominance_leq(const Root& alpha, const Root& beta) {
    if (alpha.size() != beta.size()) throw InputError("length mismatch");
    int k = alpha.size();
    // Partial sums of beta - alpha give the simple-root coefficients:
    // c_j = S_j for j < k and c_k = S_k / 2.
    long long s = 0;
    for (int i = 1; i <= k; ++i) {
        s += beta.coeff(i) - alpha.coeff(i);
        if (s < 0) return false;
        if (i == k && (s % 2) != 0) return false;
    }
    return true;
}

}  // namespace sepvar
