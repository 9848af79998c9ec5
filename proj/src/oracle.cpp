#include "sepvar/oracle.hpp"

#include <algorithm>
#include <cstdlib>

#include "sepvar/errors.hpp"
#include "sepvar/exactla.hpp"
#include "sepvar/generators.hpp"
#include "sepvar/hilbert.hpp"

namespace sepvar {

namespace {

constexpr std::int64_t kDefaultMaxColumns = 200000;

void check_columns(const Int& count, const std::string& what) {
    Int bound(static_cast<long>(oracle_max_columns()));
    if (count > bound)
        throw ColumnBoundError(what + " needs a monomial basis of " + count.get_str() +
                               " columns, exceeding SEPVAR_MAX_COLUMNS = " + bound.get_str());
}

// Multidegree (row degrees) plus O(n)-torus weight; both are preserved or
// shifted uniformly by every map the oracle assembles, so ranks decompose
// block by block.
struct GradingKey {
    std::vector<int> multidegree;
    std::vector<int> torus_weight;

    auto operator<=>(const GradingKey&) const = default;
};

// Weight of column l under the maximal torus of O(n) in the antidiagonal
// realization: +e_l for l <= n/2, -e_{n+1-l} for l > n - n/2, zero middle.
void add_column_weight(std::vector<int>& w, int l, int n, int times) {
    int p = n / 2;
    if (l <= p)
        w[static_cast<size_t>(l - 1)] += times;
    else if (l > n - p)
        w[static_cast<size_t>(n - l)] -= times;
}

GradingKey key_of_x_monomial(const Monomial& m, int n, int k) {
    GradingKey key;
    key.multidegree.assign(static_cast<size_t>(k), 0);
    key.torus_weight.assign(static_cast<size_t>(n / 2), 0);
    for (const auto& [v, e] : m.factors()) {
        key.multidegree[static_cast<size_t>(var_first(v) - 1)] += e;
        add_column_weight(key.torus_weight, var_second(v), n, e);
    }
    return key;
}

// R_ab contributes e_a + e_b to the multidegree and nothing to the torus
// weight (each term of r_ab pairs column l with n+1-l).
GradingKey key_of_R_monomial(const Monomial& m, int n, int k) {
    GradingKey key;
    key.multidegree.assign(static_cast<size_t>(k), 0);
    key.torus_weight.assign(static_cast<size_t>(n / 2), 0);
    for (const auto& [v, e] : m.factors()) {
        key.multidegree[static_cast<size_t>(var_first(v) - 1)] += e;
        key.multidegree[static_cast<size_t>(var_second(v) - 1)] += e;
    }
    return key;
}

GradingKey key_sum(const GradingKey& a, const GradingKey& b) {
    GradingKey out = a;
    for (size_t i = 0; i < out.multidegree.size(); ++i) out.multidegree[i] += b.multidegree[i];
    for (size_t i = 0; i < out.torus_weight.size(); ++i) out.torus_weight[i] += b.torus_weight[i];
    return out;
}

void enumerate_monomials_rec(const std::vector<VarId>& vars, size_t idx, int remaining,
                             std::vector<std::pair<VarId, int>>& current,
                             std::vector<Monomial>& out) {
    if (idx + 1 == vars.size()) {
        auto f = current;
        if (remaining > 0) f.emplace_back(vars[idx], remaining);
        out.emplace_back(std::move(f));
        return;
    }
    for (int e = remaining; e >= 0; --e) {
        if (e > 0) current.emplace_back(vars[idx], e);
        enumerate_monomials_rec(vars, idx + 1, remaining - e, current, out);
        if (e > 0) current.pop_back();
    }
}

std::vector<Monomial> enumerate_monomials(const std::vector<VarId>& vars, int degree) {
    std::vector<Monomial> out;
    if (vars.empty()) {
        if (degree == 0) out.emplace_back();
        return out;
    }
    std::vector<std::pair<VarId, int>> current;
    enumerate_monomials_rec(vars, 0, degree, current, out);
    return out;
}

std::vector<VarId> x_vars(int n, int k) {
    std::vector<VarId> vars;
    for (int i = 1; i <= k; ++i)
        for (int j = 1; j <= n; ++j) vars.push_back(var_x(i, j));
    return vars;
}

std::vector<VarId> R_vars(int k) {
    std::vector<VarId> vars;
    for (int a = 1; a <= k; ++a)
        for (int b = a; b <= k; ++b) vars.push_back(var_R(a, b));
    return vars;
}

Int int_coeff(const Rat& c) {
    if (!is_integer(c)) throw std::logic_error("expected integer coefficient");
    return c.get_num();
}

// Columns of one grading block, each a sparse vector over an ordered row
// key; ranks feed the fraction-free elimination with rows and columns
// transposed (rank is unchanged).
template <typename RowKey, typename Cmp>
int block_rank(const std::vector<std::map<RowKey, Int, Cmp>>& columns) {
    std::map<RowKey, int, Cmp> row_ids;
    for (const auto& col : columns)
        for (const auto& [key, v] : col) row_ids.emplace(key, 0);
    int next = 0;
    for (auto& [key, id] : row_ids) id = next++;

    std::vector<SparseRow> rows;
    rows.reserve(columns.size());
    for (const auto& col : columns) {
        SparseRow r;
        r.reserve(col.size());
        for (const auto& [key, v] : col) r.emplace_back(row_ids.at(key), v);
        std::sort(r.begin(), r.end(),
                  [](const auto& a, const auto& b) { return a.first < b.first; });
        rows.push_back(std::move(r));
    }
    return sparse_rank(std::move(rows));
}

// Row keys for the stacked Laplacians: (operator index, target monomial).
struct StackedRowLess {
    bool operator()(const std::pair<int, Monomial>& a,
                    const std::pair<int, Monomial>& b) const {
        if (a.first != b.first) return a.first < b.first;
        return GrlexGreater{}(a.second, b.second);
    }
};

}  // namespace

std::int64_t oracle_max_columns() {
    if (const char* env = std::getenv("SEPVAR_MAX_COLUMNS")) {
        char* end = nullptr;
        long long v = std::strtoll(env, &end, 10);
        if (end && *end == '\0' && v > 0) return v;
        throw InputError("SEPVAR_MAX_COLUMNS must be a positive integer");
    }
    return kDefaultMaxColumns;
}

std::int64_t dim_P(int n, int k, int m) {
    if (m < 0) throw InputError("degree must be non-negative");
    return to_int64(binomial(static_cast<unsigned long>(n * k + m - 1),
                             static_cast<unsigned long>(m)));
}

std::int64_t dim_H(int n, int k, int e) {
    if (e < 0) throw InputError("degree must be non-negative");
    check_columns(binomial(static_cast<unsigned long>(n * k + e - 1),
                           static_cast<unsigned long>(e)),
                  "dim_H(" + std::to_string(e) + ")");
    std::vector<Monomial> monomials = enumerate_monomials(x_vars(n, k), e);

    std::map<GradingKey, std::vector<const Monomial*>> blocks;
    for (const auto& m : monomials) blocks[key_of_x_monomial(m, n, k)].push_back(&m);

    std::vector<std::pair<int, int>> pairs;
    for (int a = 1; a <= k; ++a)
        for (int b = a; b <= k; ++b) pairs.emplace_back(a, b);

    std::int64_t nullity = 0;
    for (const auto& [key, cols] : blocks) {
        std::vector<std::map<std::pair<int, Monomial>, Int, StackedRowLess>> columns;
        columns.reserve(cols.size());
        for (const Monomial* m : cols) {
            std::map<std::pair<int, Monomial>, Int, StackedRowLess> col;
            MPoly p = MPoly::term(*m, Rat(1));
            for (size_t pi = 0; pi < pairs.size(); ++pi) {
                MPoly img = laplacian(pairs[pi].first, pairs[pi].second, p, n, k);
                for (const auto& [mm, c] : img.terms())
                    col.emplace(std::make_pair(static_cast<int>(pi), mm), int_coeff(c));
            }
            columns.push_back(std::move(col));
        }
        nullity += static_cast<std::int64_t>(cols.size()) - block_rank(columns);
    }
    return nullity;
}

std::int64_t dim_I(int n, int k, int d) {
    if (d < 0) throw InputError("degree must be non-negative");
    check_columns(binomial(static_cast<unsigned long>(k * (k + 1) / 2 + d - 1),
                           static_cast<unsigned long>(d)),
                  "dim_I(" + std::to_string(d) + ")");
    std::vector<Monomial> rmonos = enumerate_monomials(R_vars(k), d);

    std::map<GradingKey, std::vector<const Monomial*>> blocks;
    for (const auto& m : rmonos) blocks[key_of_R_monomial(m, n, k)].push_back(&m);

    std::int64_t rank = 0;
    for (const auto& [key, cols] : blocks) {
        std::vector<std::map<Monomial, Int, GrlexGreater>> columns;
        columns.reserve(cols.size());
        for (const Monomial* m : cols) {
            MPoly image = phi(TensorElement{MPoly::term(*m, Rat(1))}, n);
            std::map<Monomial, Int, GrlexGreater> col;
            for (const auto& [mm, c] : image.terms()) col.emplace(mm, int_coeff(c));
            columns.push_back(std::move(col));
        }
        rank += block_rank(columns);
    }
    return rank;
}

std::int64_t dim_ker_total(int n, int k, int m) {
    if (m < 0) throw InputError("degree must be non-negative");
    std::int64_t total = 0;
    for (int d = 0; 2 * d <= m; ++d) total += dim_I(n, k, d) * dim_H(n, k, m - 2 * d);
    return total - dim_P(n, k, m);
}

namespace {

struct SigmaMultiplication {
    // All columns of the degree-d multiplication map, grouped by grading key;
    // each column remembers (R-monomial index, F-basis index).
    struct Column {
        int r_index;
        int f_index;
        std::map<Monomial, Int, GrlexGreater> image;
    };
    std::vector<Monomial> rmonos;
    std::vector<MPoly> f_basis;
    std::map<GradingKey, std::vector<Column>> blocks;
};

SigmaMultiplication build_sigma_multiplication(int n, int k, const Partition& sigma, int d) {
    if (d < 0) throw InputError("degree must be non-negative");
    Weight sharp = sigma_sharp(sigma, n, k);
    Int dim_f = weyl_dim_gl(sharp);

    SigmaMultiplication out;
    out.f_basis = basis_of_F(delta_sigma(sigma, n, k), dim_f, n, k);
    out.rmonos = enumerate_monomials(R_vars(k), d);

    check_columns(Int(static_cast<long>(out.rmonos.size())) * dim_f,
                  "dim_ker_sigma(" + sigma.to_string() + ", d=" + std::to_string(d) + ")");

    std::vector<MPoly> r_images;
    std::vector<GradingKey> r_keys;
    r_images.reserve(out.rmonos.size());
    for (const auto& m : out.rmonos) {
        r_images.push_back(phi(TensorElement{MPoly::term(m, Rat(1))}, n));
        r_keys.push_back(key_of_R_monomial(m, n, k));
    }
    std::vector<GradingKey> f_keys;
    for (const auto& f : out.f_basis)
        f_keys.push_back(key_of_x_monomial(f.terms().begin()->first, n, k));

    for (size_t ri = 0; ri < r_images.size(); ++ri)
        for (size_t fi = 0; fi < out.f_basis.size(); ++fi) {
            MPoly prod = r_images[ri] * out.f_basis[fi];
            SigmaMultiplication::Column col{static_cast<int>(ri), static_cast<int>(fi), {}};
            for (const auto& [mm, c] : prod.terms()) col.image.emplace(mm, int_coeff(c));
            out.blocks[key_sum(r_keys[ri], f_keys[fi])].push_back(std::move(col));
        }
    return out;
}

}  // namespace

std::int64_t dim_ker_sigma(int n, int k, const Partition& sigma, int d) {
    SigmaMultiplication mult = build_sigma_multiplication(n, k, sigma, d);
    std::int64_t rank = 0;
    for (const auto& [key, cols] : mult.blocks) {
        std::vector<std::map<Monomial, Int, GrlexGreater>> columns;
        columns.reserve(cols.size());
        for (const auto& c : cols) columns.push_back(c.image);
        rank += block_rank(columns);
    }
    return dim_I(n, k, d) * static_cast<std::int64_t>(mult.f_basis.size()) - rank;
}

std::vector<TensorElement> kernel_vectors(int n, int k, const Partition& sigma, int d) {
    SigmaMultiplication mult = build_sigma_multiplication(n, k, sigma, d);
    std::vector<TensorElement> out;
    for (const auto& [key, cols] : mult.blocks) {
        // Dense system for this block: rows are support monomials.
        std::map<Monomial, int, GrlexGreater> row_ids;
        for (const auto& c : cols)
            for (const auto& [mm, v] : c.image) row_ids.emplace(mm, 0);
        int next = 0;
        for (auto& [mm, id] : row_ids) id = next++;

        QMatrix a(static_cast<size_t>(next), std::vector<Rat>(cols.size(), Rat(0)));
        for (size_t j = 0; j < cols.size(); ++j)
            for (const auto& [mm, v] : cols[j].image)
                a[static_cast<size_t>(row_ids.at(mm))][j] = Rat(v);

        for (const auto& vec : nullspace(a)) {
            MPoly combo;
            for (size_t j = 0; j < cols.size(); ++j) {
                if (vec[j] == 0) continue;
                const Monomial& rm = mult.rmonos[static_cast<size_t>(cols[j].r_index)];
                const MPoly& f = mult.f_basis[static_cast<size_t>(cols[j].f_index)];
                combo += MPoly::term(rm, vec[j]) * f;
            }
            out.push_back(TensorElement{combo});
        }
    }
    return out;
}

}  // namespace sepvar
