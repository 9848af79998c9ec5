#include "sepvar/generators.hpp"

#include <map>

#include "sepvar/errors.hpp"
#include "sepvar/resolution.hpp"
#include "sepvar/exactla.hpp"
#include "sepvar/hilbert.hpp"

namespace sepvar {

MPoly BorderedMatrix::entry(int i, int j) const {
    if (i < 1 || j < 1 || i > size() || j > size())
        throw InputError("bordered matrix index out of range");
    if (i > j) std::swap(i, j);  // the matrix is symmetric
    if (j <= k) return MPoly::variable(var_R(i, j));
    if (i <= k) return MPoly::variable(var_x(i, n + k + 1 - j));
    return (i - k) + (j - k) == n + 1 ? MPoly::constant(Rat(1)) : MPoly();
}

BorderedMatrix build_M(int n, int k) {
    if (n < 1 || k < 1) throw InputError("build_M requires n, k >= 1");
    return BorderedMatrix{n, k};
}

namespace {

// Determinant by cofactor expansion along the row with most zero entries,
// memoized on the (row set, column set) pair.
class MinorExpander {
  public:
    MinorExpander(const BorderedMatrix& m, int a, int b, int order)
        : rows_(static_cast<size_t>(order)), cols_(static_cast<size_t>(order)) {
        for (int i = 0; i < order; ++i) {
            rows_[static_cast<size_t>(i)] = a + i;
            cols_[static_cast<size_t>(i)] = b + i;
        }
        entries_.resize(static_cast<size_t>(order));
        for (int i = 0; i < order; ++i) {
            entries_[static_cast<size_t>(i)].resize(static_cast<size_t>(order));
            for (int j = 0; j < order; ++j)
                entries_[static_cast<size_t>(i)][static_cast<size_t>(j)] =
                    m.entry(rows_[static_cast<size_t>(i)], cols_[static_cast<size_t>(j)]);
        }
        order_ = order;
    }

    MPoly det() { return expand((1u << order_) - 1, (1u << order_) - 1); }

  private:
    MPoly expand(unsigned row_mask, unsigned col_mask) {
        if (row_mask == 0) return MPoly::constant(Rat(1));
        auto key = std::make_pair(row_mask, col_mask);
        auto hit = memo_.find(key);
        if (hit != memo_.end()) return hit->second;

        // Pick the remaining row with the most zero entries.
        int best_row = -1, best_nonzero = order_ + 1;
        for (int i = 0; i < order_; ++i) {
            if (!(row_mask & (1u << i))) continue;
            int nz = 0;
            for (int j = 0; j < order_; ++j)
                if ((col_mask & (1u << j)) &&
                    !entries_[static_cast<size_t>(i)][static_cast<size_t>(j)].is_zero())
                    ++nz;
            if (nz < best_nonzero) {
                best_nonzero = nz;
                best_row = i;
            }
        }

        MPoly out;
        int row_pos = 0;
        for (int i = 0; i < best_row; ++i)
            if (row_mask & (1u << i)) ++row_pos;
        int col_pos = 0;
        for (int j = 0; j < order_; ++j) {
            if (!(col_mask & (1u << j))) continue;
            const MPoly& e = entries_[static_cast<size_t>(best_row)][static_cast<size_t>(j)];
            if (!e.is_zero()) {
                MPoly sub = expand(row_mask & ~(1u << best_row), col_mask & ~(1u << j));
                MPoly contrib = e * sub;
                out += ((row_pos + col_pos) % 2 == 0) ? contrib : contrib.scaled(Rat(-1));
            }
            ++col_pos;
        }
        memo_.emplace(key, out);
        return out;
    }

    std::vector<int> rows_, cols_;
    std::vector<std::vector<MPoly>> entries_;
    std::map<std::pair<unsigned, unsigned>, MPoly> memo_;
    int order_ = 0;
};

}  // namespace

TensorElement bordered_minor(int a, int b, int n, int k) {
    BorderedMatrix m = build_M(n, k);
    if (a < 1 || b < 1 || a > k || b > k)
        throw InputError("minor window (" + std::to_string(a) + "," + std::to_string(b) +
                         ") must satisfy 1 <= a,b <= k");
    MinorExpander exp(m, a, b, n + 1);
    return TensorElement{exp.det()};
}

TensorElement generator(int t, int d, const Partition& mu, int n, int k) {
    if (d <= 0) throw InputError("generator requires d > 0");
    if (t < 0 || t > d) throw InputError("generator requires 0 <= t <= d");
    if (t + d > n) throw InputError("narrow type (t,d) needs t + d <= n");
    Partition sigma0 = narrow_recompose(NarrowDecomposition{t, d, Partition()});
    if (!in_sigma_nk(sigma0, n, k))
        throw InputError("narrow diagram " + sigma0.to_string() + " is not in Sigma_{n,k}");
    if (!in_sigma0(sigma0, n, k))
        throw InputError("narrow diagram " + sigma0.to_string() + " is not in Sigma^0_{n,k}");
    if (mu.depth() > t) throw InputError("mu must have depth at most t");

    TensorElement minor = bordered_minor(d - n + k, t - n + k, n, k);
    if (mu.trivial()) return minor;
    return TensorElement{minor.poly * delta_sigma(mu, n, k)};
}

GeneratorReport verify_generator(int t, int d, const Partition& mu, int n, int k) {
    TensorElement gen = generator(t, d, mu, n, k);
    Partition sigma = narrow_recompose(NarrowDecomposition{t, d, mu});

    GeneratorReport rep;
    rep.nonzero_in_IH = !is_zero_in_IH(gen, n, k);
    rep.phi_zero = phi(gen, n).is_zero();
    rep.right_factors_harmonic = true;
    for (const auto& [r, xs] : gen.grouped_by_R()) {
        (void)r;
        if (!is_harmonic(xs, n, k)) {
            rep.right_factors_harmonic = false;
            break;
        }
    }
    Weight expected = lambda_prime(sigma, n, k);
    rep.expected_weight = expected.to_string();
    try {
        Weight actual = weight_of(gen, n, k);
        rep.weight = actual.to_string();
        rep.weight_matches = (actual == expected);
    } catch (const NotWeightVectorError&) {
        rep.weight_matches = false;
    }
    rep.highest_weight = is_hw_tensor(gen, n, k);
    return rep;
}

std::vector<TensorElement> basis_of_F(const TensorElement& hwv, const Int& target_dim, int n,
                                      int k) {
    if (hwv.is_zero()) throw InputError("basis_of_F requires a nonzero highest weight vector");
    std::map<Monomial, int, GrlexGreater> keys;
    auto coords = [&keys](const TensorElement& t) {
        std::vector<std::pair<int, Rat>> v;
        for (const auto& [m, c] : t.poly.terms()) {
            auto it = keys.emplace(m, static_cast<int>(keys.size())).first;
            v.emplace_back(it->second, c);
        }
        return v;
    };

    IncrementalSpan span;
    std::vector<TensorElement> basis;
    span.add(coords(hwv));
    basis.push_back(hwv);
    std::vector<TensorElement> frontier{hwv};
    while (!frontier.empty()) {
        std::vector<TensorElement> next;
        for (const auto& f : frontier)
            for (int s = 1; s <= k; ++s)
                for (int t = s + 1; t <= k; ++t) {
                    TensorElement lowered = h_action_tensor(s, t, f, n);
                    if (lowered.is_zero()) continue;
                    if (span.add(coords(lowered))) {
                        basis.push_back(lowered);
                        next.push_back(lowered);
                    }
                }
        frontier = std::move(next);
    }
    if (Int(static_cast<long>(basis.size())) != target_dim)
        throw DimensionMismatchError("lowering closure has dimension " +
                                     std::to_string(basis.size()) + ", expected " +
                                     target_dim.get_str());
    return basis;
}

std::vector<MPoly> basis_of_F(const MPoly& hwv, const Int& target_dim, int n, int k) {
    if (hwv.has_R()) throw InputError("harmonic highest weight vector must be R-free");
    auto tensors = basis_of_F(TensorElement{hwv}, target_dim, n, k);
    std::vector<MPoly> out;
    out.reserve(tensors.size());
    for (auto& t : tensors) out.push_back(std::move(t.poly));
    return out;
}

}  // namespace sepvar
