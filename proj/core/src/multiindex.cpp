#include "bergtoep/multiindex.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace bergtoep {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    if (parts_.empty())
        throw ValidationError("partition: needs at least one block");
    int prev = 0;
    offsets_.reserve(parts_.size());
    for (int kj : parts_) {
        if (kj < 1)
            throw ValidationError("partition: block sizes must be positive");
        if (kj < prev)
            throw ValidationError("partition: block sizes must be nondecreasing");
        prev = kj;
    }
    int off = 0;
    for (int kj : parts_) {
        offsets_.push_back(off);
        off += kj;
    }
    n_ = off;
}

MultiIndex::MultiIndex(std::vector<int> entries) : entries_(std::move(entries)) {
    degree_ = 0;
    for (int e : entries_) {
        if (e < 0)
            throw ValidationError("multi-index: entries must be nonnegative");
        degree_ += e;
    }
}

MultiIndex MultiIndex::zero(int n) {
    return MultiIndex(std::vector<int>(static_cast<std::size_t>(n), 0));
}

MultiIndex MultiIndex::unit(int n, int i) {
    std::vector<int> e(static_cast<std::size_t>(n), 0);
    e.at(static_cast<std::size_t>(i)) = 1;
    return MultiIndex(std::move(e));
}

MultiIndex MultiIndex::slice(int begin, int len) const {
    if (begin < 0 || len < 0 || begin + len > size())
        throw DimensionError("multi-index slice out of range");
    std::vector<int> e(entries_.begin() + begin, entries_.begin() + begin + len);
    return MultiIndex(std::move(e));
}

MultiIndex operator+(const MultiIndex& a, const MultiIndex& b) {
    if (a.size() != b.size())
        throw DimensionError("multi-index addition: length mismatch");
    std::vector<int> e(a.entries_);
    for (std::size_t i = 0; i < e.size(); ++i) e[i] += b.entries_[i];
    return MultiIndex(std::move(e));
}

std::optional<MultiIndex> try_subtract(const MultiIndex& a, const MultiIndex& b) {
    if (a.size() != b.size())
        throw DimensionError("multi-index subtraction: length mismatch");
    std::vector<int> e(a.entries());
    for (std::size_t i = 0; i < e.size(); ++i) {
        e[i] -= b.entries()[i];
        if (e[i] < 0) return std::nullopt;
    }
    return MultiIndex(std::move(e));
}

bool graded_lex_less(const MultiIndex& a, const MultiIndex& b) {
    if (a.size() != b.size())
        throw DimensionError("graded-lex comparison: length mismatch");
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    for (int i = 0; i < a.size(); ++i) {
        if (a[i] != b[i]) return a[i] > b[i];
    }
    return false;
}

std::vector<int> block_degrees(const MultiIndex& alpha, const Partition& k) {
    if (alpha.size() != k.dimension())
        throw DimensionError("block_degrees: multi-index length != partition dimension");
    std::vector<int> s(static_cast<std::size_t>(k.block_count()), 0);
    for (int j = 0; j < k.block_count(); ++j) {
        int acc = 0;
        for (int i = 0; i < k.part(j); ++i) acc += alpha[k.offset(j) + i];
        s[static_cast<std::size_t>(j)] = acc;
    }
    return s;
}

namespace {

void enumerate_degree(int n, int d, std::vector<int>& cur, std::vector<MultiIndex>& out) {
    if (n == 1) {
        cur.push_back(d);
        out.emplace_back(cur);
        cur.pop_back();
        return;
    }
    // Larger leading entry first keeps the graded-lex order.
    for (int e = d; e >= 0; --e) {
        cur.push_back(e);
        enumerate_degree(n - 1, d - e, cur, out);
        cur.pop_back();
    }
}

} // namespace

BasisOrder::BasisOrder(int n, int m) : n_(n), m_(m) {
    if (n < 1) throw ValidationError("basis: n must be >= 1");
    if (m < 0) throw ValidationError("basis: m must be >= 0");
    std::vector<int> cur;
    cur.reserve(static_cast<std::size_t>(n));
    for (int d = 0; d <= m; ++d) enumerate_degree(n, d, cur, list_);
    for (std::size_t i = 0; i < list_.size(); ++i) lookup_.emplace(list_[i].entries(), i);
}

std::optional<std::size_t> BasisOrder::index_of(const MultiIndex& alpha) const {
    auto it = lookup_.find(alpha.entries());
    if (it == lookup_.end()) return std::nullopt;
    return it->second;
}

double log_factorial(int k) {
    if (k < 0) throw ValidationError("log_factorial: negative argument");
    return std::lgamma(static_cast<double>(k) + 1.0);
}

double log_multi_factorial(const MultiIndex& alpha) {
    double acc = 0.0;
    for (int e : alpha.entries()) acc += log_factorial(e);
    return acc;
}

BigInt factorial_exact(int k) {
    if (k < 0) throw ValidationError("factorial_exact: negative argument");
    BigInt r = 1;
    for (int i = 2; i <= k; ++i) r *= i;
    return r;
}

BigInt multi_factorial_exact(const MultiIndex& alpha) {
    BigInt r = 1;
    for (int e : alpha.entries()) r *= factorial_exact(e);
    return r;
}

std::uint64_t binomial_u64(int n, int k) {
    if (k < 0 || k > n) return 0;
    k = std::min(k, n - k);
    BigInt r = 1;
    for (int i = 1; i <= k; ++i) {
        r *= (n - k + i);
        r /= i;
    }
    if (r > BigInt(UINT64_MAX))
        throw ValidationError("binomial_u64: value does not fit in 64 bits");
    return r.convert_to<std::uint64_t>();
}

Rational monomial_norm_sq_exact(const MultiIndex& alpha, int m) {
    if (alpha.degree() > m)
        throw ValidationError("monomial norm: |alpha| exceeds weight m");
    return Rational(multi_factorial_exact(alpha) * factorial_exact(m - alpha.degree()),
                    factorial_exact(m));
}

double monomial_norm_sq(const MultiIndex& alpha, int m) {
    if (alpha.degree() > m)
        throw ValidationError("monomial norm: |alpha| exceeds weight m");
    return std::exp(log_multi_factorial(alpha) + log_factorial(m - alpha.degree()) -
                    log_factorial(m));
}

} // namespace bergtoep
