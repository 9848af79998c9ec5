#include "sepvar/hilbert.hpp"

#include <algorithm>

#include "sepvar/errors.hpp"

namespace sepvar {

namespace {

void strip_trailing_zeros(std::vector<Int>& v) {
    while (!v.empty() && v.back() == 0) v.pop_back();
}

// Divides p by (1-q) in place; only called when p(1) == 0.
void divide_by_one_minus_q(std::vector<Int>& p) {
    // (c0 + c1 q + ...) / (1-q): quotient q_i = c_0 + ... + c_i, dropping the
    // last (zero) coefficient.
    Int acc = 0;
    for (size_t i = 0; i + 1 < p.size(); ++i) {
        acc += p[i];
        p[i] = acc;
    }
    p.pop_back();
    strip_trailing_zeros(p);
}

Int eval_at_one(const std::vector<Int>& p) {
    Int s = 0;
    for (const Int& c : p) s += c;
    return s;
}

}  // namespace

RationalSeries::RationalSeries(std::vector<Int> numerator, int pole_order)
    : num_(std::move(numerator)), pole_(pole_order) {
    if (pole_ < 0) throw InputError("pole order must be non-negative");
    strip_trailing_zeros(num_);
    if (num_.empty()) {
        pole_ = 0;
        return;
    }
    while (pole_ > 0 && eval_at_one(num_) == 0) {
        divide_by_one_minus_q(num_);
        --pole_;
    }
}

RationalSeries RationalSeries::operator+(const RationalSeries& o) const {
    int p = std::max(pole_, o.pole_);
    // Align both numerators over (1-q)^p.
    auto lift = [p](const std::vector<Int>& num, int pole) {
        std::vector<Int> out = num;
        for (int i = pole; i < p; ++i) {
            // multiply by (1-q)
            std::vector<Int> next(out.size() + 1, Int(0));
            for (size_t j = 0; j < out.size(); ++j) {
                next[j] += out[j];
                next[j + 1] -= out[j];
            }
            out = std::move(next);
        }
        return out;
    };
    std::vector<Int> a = lift(num_, pole_);
    std::vector<Int> b = lift(o.num_, o.pole_);
    if (a.size() < b.size()) a.resize(b.size(), Int(0));
    for (size_t i = 0; i < b.size(); ++i) a[i] += b[i];
    return RationalSeries(std::move(a), p);
}

RationalSeries RationalSeries::operator-(const RationalSeries& o) const {
    return *this + o.scaled(Int(-1));
}

RationalSeries RationalSeries::scaled(const Int& c) const {
    std::vector<Int> out = num_;
    for (Int& x : out) x *= c;
    return RationalSeries(std::move(out), pole_);
}

std::vector<Int> RationalSeries::expand(int terms) const {
    if (terms < 0) throw InputError("expansion order must be non-negative");
    std::vector<Int> out(static_cast<size_t>(terms) + 1, Int(0));
    for (size_t m = 0; m < out.size(); ++m) {
        Int c = 0;
        for (size_t j = 0; j < num_.size() && j <= m; ++j) {
            if (pole_ == 0) {
                if (j == m) c += num_[j];
            } else {
                c += num_[j] * binomial(static_cast<unsigned long>(m - j + pole_ - 1),
                                        static_cast<unsigned long>(pole_ - 1));
            }
        }
        out[m] = c;
    }
    return out;
}

std::string RationalSeries::to_string() const {
    if (num_.empty()) return "0";
    size_t low = 0;
    while (num_[low] == 0) ++low;
    Int content = 0;
    for (size_t i = low; i < num_.size(); ++i) {
        Int g;
        mpz_gcd(g.get_mpz_t(), content.get_mpz_t(), num_[i].get_mpz_t());
        content = g;
    }
    if (num_[low] < 0) content = -content;

    // num = content * q^low * inner(q) with inner(0) >= 1.
    std::vector<Int> inner;
    for (size_t i = low; i < num_.size(); ++i) inner.push_back(num_[i] / content);

    std::string mantissa;
    if (content == -1)
        mantissa = "-";
    else if (content != 1)
        mantissa = content.get_str();
    if (low > 0) {
        mantissa += "q";
        if (low > 1) mantissa += "^" + std::to_string(low);
    }

    if (inner.size() == 1) {
        if (mantissa.empty() || mantissa == "-") mantissa += "1";
    } else {
        std::string poly;
        for (size_t i = 0; i < inner.size(); ++i) {
            if (inner[i] == 0) continue;
            if (!poly.empty()) poly += (inner[i] > 0) ? "+" : "-";
            Int a = abs(inner[i]);
            if (i == 0)
                poly += a.get_str();
            else {
                if (a != 1) poly += a.get_str();
                poly += "q";
                if (i > 1) poly += "^" + std::to_string(i);
            }
        }
        mantissa += "(" + poly + ")";
    }

    if (pole_ > 0) {
        mantissa += "/(1-q)";
        if (pole_ > 1) mantissa += "^" + std::to_string(pole_);
    }
    return mantissa;
}

Int weyl_dim_gl(const Weight& lambda) {
    if (!lambda.k_dominant_integral())
        throw InputError("weyl_dim_gl requires a dominant weight with integral differences");
    Int num = 1, den = 1;
    int k = lambda.size();
    for (int i = 1; i <= k; ++i)
        for (int j = i + 1; j <= k; ++j) {
            long long diff = (lambda.twice(i) - lambda.twice(j)) / 2;
            num *= int_of(diff + (j - i));
            den *= (j - i);
        }
    Int q, r;
    mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    if (r != 0) throw std::logic_error("Weyl dimension is not an integer");
    return q;
}

RationalSeries hs_verma(const Weight& lambda, int k) {
    return RationalSeries({weyl_dim_gl(lambda)}, k * (k + 1) / 2);
}

RationalSeries hs_L(const Partition& sigma, int n, int k) {
    Resolution res = resolution(sigma, n, k);
    int pole = k * (k + 1) / 2;
    std::vector<Int> num;
    for (size_t stage = 0; stage < res.stages.size(); ++stage)
        for (const ResolutionTerm& term : res.stages[stage]) {
            size_t s = static_cast<size_t>(term.shift);
            if (num.size() <= s) num.resize(s + 1, Int(0));
            Int d = weyl_dim_gl(term.weight);
            num[s] += (stage % 2 == 0) ? d : -d;
        }
    return RationalSeries(std::move(num), pole);
}

RationalSeries hs_I(int n, int k) {
    if (n >= k) return RationalSeries({Int(1)}, k * (k + 1) / 2);
    return hs_L(Partition(), n, k);
}

RationalSeries hs_kernel(const Partition& sigma, int n, int k) {
    Int dim = weyl_dim_gl(sigma_sharp(sigma, n, k));
    return hs_I(n, k).scaled(dim) - hs_L(sigma, n, k);
}

std::vector<Int> expand(const RationalSeries& s, int terms) { return s.expand(terms); }

}  // namespace sepvar
