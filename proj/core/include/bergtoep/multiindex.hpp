#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "bergtoep/common.hpp"

namespace bergtoep {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Block structure k = (k_1 <= ... <= k_l) of n = sum k_j.
class Partition {
public:
    explicit Partition(std::vector<int> parts);

    int block_count() const { return static_cast<int>(parts_.size()); }
    int dimension() const { return n_; }
    int part(int j) const { return parts_[static_cast<std::size_t>(j)]; }
    /// Start offset of block j in a length-n coordinate vector.
    int offset(int j) const { return offsets_[static_cast<std::size_t>(j)]; }
    const std::vector<int>& parts() const { return parts_; }

    bool operator==(const Partition& other) const { return parts_ == other.parts_; }

private:
    std::vector<int> parts_;
    std::vector<int> offsets_;
    int n_ = 0;
};

/// Multi-index alpha in N^n with cached degree |alpha|.
class MultiIndex {
public:
    MultiIndex() = default;
    explicit MultiIndex(std::vector<int> entries);
    static MultiIndex zero(int n);
    static MultiIndex unit(int n, int i);

    int size() const { return static_cast<int>(entries_.size()); }
    int degree() const { return degree_; }
    int operator[](int i) const { return entries_[static_cast<std::size_t>(i)]; }
    const std::vector<int>& entries() const { return entries_; }

    /// Entries [begin, begin+len) as a new multi-index.
    MultiIndex slice(int begin, int len) const;

    bool operator==(const MultiIndex& other) const { return entries_ == other.entries_; }
    bool operator!=(const MultiIndex& other) const { return !(*this == other); }

    friend MultiIndex operator+(const MultiIndex& a, const MultiIndex& b);

private:
    std::vector<int> entries_;
    int degree_ = 0;
};

/// a - b when all components stay nonnegative, nullopt otherwise.
std::optional<MultiIndex> try_subtract(const MultiIndex& a, const MultiIndex& b);

/// Ordering used for all bases: degree first, then lexicographic with the
/// leftmost coordinate dominant, larger entry first ((1,0) precedes (0,1)).
bool graded_lex_less(const MultiIndex& a, const MultiIndex& b);

/// Per-block degrees (|alpha_(1)|, ..., |alpha_(l)|); empty blocks sum to 0.
std::vector<int> block_degrees(const MultiIndex& alpha, const Partition& k);

/// The ordered index set J_n(m) = { alpha : |alpha| <= m }.
class BasisOrder {
public:
    BasisOrder(int n, int m);

    int n() const { return n_; }
    int max_degree() const { return m_; }
    std::size_t size() const { return list_.size(); }
    const MultiIndex& at(std::size_t i) const { return list_[i]; }
    const std::vector<MultiIndex>& list() const { return list_; }
    std::optional<std::size_t> index_of(const MultiIndex& alpha) const;

private:
    int n_ = 0;
    int m_ = 0;
    std::vector<MultiIndex> list_;
    std::map<std::vector<int>, std::size_t> lookup_;
};

inline BasisOrder enumerate_basis(int n, int m) { return BasisOrder(n, m); }

double log_factorial(int k);
/// sum_i log(alpha_i!)
double log_multi_factorial(const MultiIndex& alpha);
BigInt factorial_exact(int k);
BigInt multi_factorial_exact(const MultiIndex& alpha);
std::uint64_t binomial_u64(int n, int k);

/// ||z^alpha||^2 = alpha! (m-|alpha|)! / m! in A^2_m, exact rational path.
Rational monomial_norm_sq_exact(const MultiIndex& alpha, int m);
/// Same value through log-gamma; survives n+m up to ~40 without overflow.
double monomial_norm_sq(const MultiIndex& alpha, int m);

} // namespace bergtoep
