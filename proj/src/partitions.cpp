#include "sepvar/partitions.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "sepvar/errors.hpp"

namespace sepvar {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
    for (size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] < 0) throw InputError("partition parts must be non-negative");
        if (i + 1 < parts_.size() && parts_[i] < parts_[i + 1])
            throw InputError("partition parts must be weakly decreasing");
    }
}

Partition Partition::parse(const std::string& s) {
    std::vector<int> parts;
    std::string token;
    std::istringstream in(s);
    while (std::getline(in, token, ',')) {
        if (token.empty()) throw InputError("empty part in partition string");
        size_t pos = 0;
        int v = 0;
        try {
            v = std::stoi(token, &pos);
        } catch (const std::exception&) {
            throw InputError("cannot parse partition part '" + token + "'");
        }
        if (pos != token.size()) throw InputError("cannot parse partition part '" + token + "'");
        parts.push_back(v);
    }
    return Partition(std::move(parts));
}

int Partition::boxes() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

int Partition::part(int i) const {
    if (i < 1) throw InputError("partition part index is 1-based");
    if (i > depth()) return 0;
    return parts_[static_cast<size_t>(i - 1)];
}

Partition Partition::operator+(const Partition& other) const {
    std::vector<int> sum(std::max(parts_.size(), other.parts_.size()), 0);
    for (size_t i = 0; i < sum.size(); ++i) {
        if (i < parts_.size()) sum[i] += parts_[i];
        if (i < other.parts_.size()) sum[i] += other.parts_[i];
    }
    return Partition(std::move(sum));
}

std::string Partition::to_string() const {
    std::string out;
    for (size_t i = 0; i < parts_.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(parts_[i]);
    }
    return out;
}

Weight Weight::from_twice(std::vector<long long> twice) {
    Weight w;
    w.twice_ = std::move(twice);
    return w;
}

Weight Weight::from_ints(const std::vector<long long>& coords) {
    std::vector<long long> twice(coords.size());
    for (size_t i = 0; i < coords.size(); ++i) twice[i] = 2 * coords[i];
    return from_twice(std::move(twice));
}

long long Weight::sum_twice() const {
    long long s = 0;
    for (long long t : twice_) s += t;
    return s;
}

bool Weight::weakly_decreasing() const {
    for (size_t i = 0; i + 1 < twice_.size(); ++i)
        if (twice_[i] < twice_[i + 1]) return false;
    return true;
}

bool Weight::integral_differences() const {
    for (size_t i = 0; i + 1 < twice_.size(); ++i)
        if (((twice_[i] - twice_[i + 1]) & 1) != 0) return false;
    return true;
}

Weight Weight::operator+(const Weight& o) const {
    if (size() != o.size()) throw InputError("weight length mismatch");
    std::vector<long long> t(twice_);
    for (size_t i = 0; i < t.size(); ++i) t[i] += o.twice_[i];
    return from_twice(std::move(t));
}

Weight Weight::operator-(const Weight& o) const {
    if (size() != o.size()) throw InputError("weight length mismatch");
    std::vector<long long> t(twice_);
    for (size_t i = 0; i < t.size(); ++i) t[i] -= o.twice_[i];
    return from_twice(std::move(t));
}

std::string Weight::to_string() const {
    std::string out;
    for (size_t i = 0; i < twice_.size(); ++i) {
        if (i) out += ',';
        long long t = twice_[i];
        if (t % 2 == 0)
            out += std::to_string(t / 2);
        else
            out += std::to_string(t) + "/2";
    }
    return out;
}

int depth(const Partition& sigma) { return sigma.depth(); }

bool in_sigma_nk(const Partition& sigma, int n, int k) {
    return sigma_nk_violation(sigma, n, k).empty();
}

std::string sigma_nk_violation(const Partition& sigma, int n, int k) {
    int col1 = 0, col2 = 0;
    for (int p : sigma.parts()) {
        if (p >= 1) ++col1;
        if (p >= 2) ++col2;
    }
    if (col1 + col2 > n)
        return "first two columns of " + sigma.to_string() + " hold " +
               std::to_string(col1 + col2) + " boxes, more than n = " + std::to_string(n);
    if (sigma.depth() > k)
        return "depth of " + sigma.to_string() + " is " + std::to_string(sigma.depth()) +
               ", more than k = " + std::to_string(k);
    return "";
}

Weight sigma_sharp(const Partition& sigma, int n, int k) {
    if (std::string v = sigma_nk_violation(sigma, n, k); !v.empty())
        throw InputError("sigma is not in Sigma_{n,k}: " + v);
    std::vector<long long> twice(static_cast<size_t>(k));
    for (int i = 1; i <= k; ++i)
        twice[static_cast<size_t>(i - 1)] = -2LL * sigma.part(k + 1 - i) - n;
    return Weight::from_twice(std::move(twice));
}

bool in_sigma0(const Partition& sigma, int n, int k) {
    if (std::string v = sigma_nk_violation(sigma, n, k); !v.empty())
        throw InputError("sigma is not in Sigma_{n,k}: " + v);
    if (n >= 2 * k - 1) return false;
    if (k > n) return true;
    return sigma.part(n + 1 - k) >= 2;
}

NarrowDecomposition narrow_decompose(const Partition& sigma) {
    NarrowDecomposition nd;
    nd.d = sigma.depth();
    for (int i = 1; i <= nd.d; ++i)
        if (sigma.part(i) >= 2) nd.t = i;
    std::vector<int> mu;
    for (int i = 1; i <= nd.t; ++i) mu.push_back(sigma.part(i) - 2);
    nd.mu = Partition(std::move(mu));
    return nd;
}

Partition narrow_recompose(const NarrowDecomposition& nd) {
    std::vector<int> parts;
    for (int i = 0; i < nd.t; ++i) parts.push_back(2);
    for (int i = nd.t; i < nd.d; ++i) parts.push_back(1);
    return Partition(std::move(parts)) + nd.mu;
}

namespace {

void enumerate_rec(int remaining, int max_part, int rows_left,
                   std::vector<int>& current, std::vector<Partition>& out) {
    out.emplace_back(std::vector<int>(current));
    if (rows_left == 0) return;
    for (int p = 1; p <= std::min(remaining, max_part); ++p) {
        current.push_back(p);
        enumerate_rec(remaining - p, p, rows_left - 1, current, out);
        current.pop_back();
    }
}

}  // namespace

std::vector<Partition> enumerate_sigma(int n, int k, int max_boxes) {
    if (max_boxes < 0) throw InputError("max_boxes must be non-negative");
    std::vector<Partition> all;
    std::vector<int> current;
    enumerate_rec(max_boxes, max_boxes, k, current, all);
    std::vector<Partition> out;
    for (auto& p : all)
        if (in_sigma_nk(p, n, k)) out.push_back(p);
    std::sort(out.begin(), out.end(),
              [](const Partition& a, const Partition& b) { return a.parts() < b.parts(); });
    return out;
}

}  // namespace sepvar
