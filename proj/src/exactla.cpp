#include "sepvar/exactla.hpp"

#include <algorithm>
#include <list>

namespace sepvar {

namespace {

void normalize_content(SparseRow& row) {
    if (row.empty()) return;
    Int g = 0;
    for (const auto& [c, v] : row) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
        if (g == 1) break;
    }
    if (g > 1)
        for (auto& [c, v] : row) v /= g;
    if (row.front().second < 0)
        for (auto& [c, v] : row) v = -v;
}

// row_i <- p * row_i - c * row_p, sparse merge on sorted columns.
SparseRow combine(const SparseRow& ri, const Int& p, const SparseRow& rp, const Int& c) {
    SparseRow out;
    out.reserve(ri.size() + rp.size());
    size_t a = 0, b = 0;
    while (a < ri.size() || b < rp.size()) {
        if (b == rp.size() || (a < ri.size() && ri[a].first < rp[b].first)) {
            out.emplace_back(ri[a].first, p * ri[a].second);
            ++a;
        } else if (a == ri.size() || rp[b].first < ri[a].first) {
            out.emplace_back(rp[b].first, -c * rp[b].second);
            ++b;
        } else {
            Int v = p * ri[a].second - c * rp[b].second;
            if (v != 0) out.emplace_back(ri[a].first, std::move(v));
            ++a;
            ++b;
        }
    }
    return out;
}

}  // namespace

int sparse_rank(std::vector<SparseRow> rows) {
    for (auto& r : rows) normalize_content(r);
    std::list<SparseRow> pending;
    for (auto& r : rows)
        if (!r.empty()) pending.push_back(std::move(r));

    int rank = 0;
    while (!pending.empty()) {
        // Deterministic pivot: the shortest row, earliest on ties.
        auto pivot_it = pending.begin();
        for (auto it = pending.begin(); it != pending.end(); ++it)
            if (it->size() < pivot_it->size()) pivot_it = it;
        SparseRow pivot = std::move(*pivot_it);
        pending.erase(pivot_it);
        ++rank;

        int col = pivot.front().first;
        const Int& p = pivot.front().second;
        for (auto it = pending.begin(); it != pending.end();) {
            auto hit = std::lower_bound(
                it->begin(), it->end(), col,
                [](const std::pair<int, Int>& e, int c) { return e.first < c; });
            if (hit == it->end() || hit->first != col) {
                ++it;
                continue;
            }
            Int c = hit->second;
            *it = combine(*it, p, pivot, c);
            normalize_content(*it);
            if (it->empty())
                it = pending.erase(it);
            else
                ++it;
        }
    }
    return rank;
}

std::vector<int> rref(QMatrix& m) {
    std::vector<int> pivots;
    if (m.empty()) return pivots;
    size_t rows = m.size(), cols = m[0].size();
    size_t r = 0;
    for (size_t c = 0; c < cols && r < rows; ++c) {
        size_t sel = rows;
        for (size_t i = r; i < rows; ++i)
            if (m[i][c] != 0) {
                sel = i;
                break;
            }
        if (sel == rows) continue;
        std::swap(m[r], m[sel]);
        Rat inv = m[r][c];
        for (size_t j = c; j < cols; ++j) m[r][j] /= inv;
        for (size_t i = 0; i < rows; ++i) {
            if (i == r || m[i][c] == 0) continue;
            Rat f = m[i][c];
            for (size_t j = c; j < cols; ++j) m[i][j] -= f * m[r][j];
        }
        pivots.push_back(static_cast<int>(c));
        ++r;
    }
    return pivots;
}

std::vector<std::vector<Rat>> nullspace(const QMatrix& a) {
    if (a.empty()) return {};
    QMatrix m = a;
    size_t cols = m[0].size();
    std::vector<int> pivots = rref(m);
    std::vector<bool> is_pivot(cols, false);
    for (int c : pivots) is_pivot[static_cast<size_t>(c)] = true;

    std::vector<std::vector<Rat>> basis;
    for (size_t free_c = 0; free_c < cols; ++free_c) {
        if (is_pivot[free_c]) continue;
        std::vector<Rat> v(cols, Rat(0));
        v[free_c] = 1;
        for (size_t pi = 0; pi < pivots.size(); ++pi)
            v[static_cast<size_t>(pivots[pi])] = -m[pi][free_c];
        basis.push_back(std::move(v));
    }
    return basis;
}

bool IncrementalSpan::add(std::vector<std::pair<int, Rat>> vec) {
    std::sort(vec.begin(), vec.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    // Merge duplicate keys, drop zeros.
    std::vector<std::pair<int, Rat>> clean;
    for (auto& [key, val] : vec) {
        if (!clean.empty() && clean.back().first == key)
            clean.back().second += val;
        else
            clean.emplace_back(key, val);
        if (!clean.empty() && clean.back().second == 0) clean.pop_back();
    }
    vec = std::move(clean);

    for (const auto& row : rows_) {
        if (vec.empty()) break;
        if (row.front().first != vec.front().first) continue;
        Rat f = vec.front().second;
        // vec -= f * row (both sorted).
        std::vector<std::pair<int, Rat>> next;
        size_t a = 0, b = 0;
        while (a < vec.size() || b < row.size()) {
            if (b == row.size() || (a < vec.size() && vec[a].first < row[b].first)) {
                next.push_back(vec[a]);
                ++a;
            } else if (a == vec.size() || row[b].first < vec[a].first) {
                next.emplace_back(row[b].first, -f * row[b].second);
                ++b;
            } else {
                Rat v = vec[a].second - f * row[b].second;
                if (v != 0) next.emplace_back(vec[a].first, std::move(v));
                ++a;
                ++b;
            }
        }
        vec = std::move(next);
    }
    if (vec.empty()) return false;
    Rat lead = vec.front().second;
    for (auto& [k, v] : vec) v /= lead;
    rows_.push_back(std::move(vec));
    std::sort(rows_.begin(), rows_.end(),
              [](const auto& a, const auto& b) { return a.front().first < b.front().first; });
    return true;
}

}  // namespace sepvar
