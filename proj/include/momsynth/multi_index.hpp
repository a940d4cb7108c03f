#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <memory>
#include <span>
#include <string>
#include <vector>

namespace momsynth {

/// An exponent tuple alpha in N_0^n, addressing the moment of x^alpha.
class MultiIndex {
public:
    MultiIndex() = default;
    explicit MultiIndex(std::size_t n) : entries_(n, 0) {}
    explicit MultiIndex(std::vector<std::uint32_t> entries) : entries_(std::move(entries)) {}
    MultiIndex(std::initializer_list<std::uint32_t> entries) : entries_(entries) {}

    std::size_t size() const { return entries_.size(); }
    std::uint32_t operator[](std::size_t i) const { return entries_[i]; }
    std::span<const std::uint32_t> entries() const { return entries_; }
    unsigned degree() const;

    /// Componentwise beta <= alpha.
    bool dominated_by(const MultiIndex& alpha) const;
    /// alpha - beta; requires beta dominated by alpha.
    MultiIndex minus(const MultiIndex& beta) const;

    std::string to_string() const;

    friend bool operator==(const MultiIndex&, const MultiIndex&) = default;
    /// Graded lexicographic: degree first, then lexicographic.
    friend std::strong_ordering operator<=>(const MultiIndex& a, const MultiIndex& b);

private:
    std::vector<std::uint32_t> entries_;
};

/// Product of scalar binomials C(alpha_i, beta_i), computed exactly.
/// Throws ShapeMismatch on dimension mismatch, std::domain_error unless beta <= alpha,
/// std::overflow_error if the product leaves 64 bits.
std::uint64_t binomial(const MultiIndex& alpha, const MultiIndex& beta);

/// Number of multi-indices of dimension n with degree <= d, i.e. C(n+d, d).
std::size_t index_count(std::size_t n, unsigned d);

/// All multi-indices with |alpha| <= d in graded-lex order. Ranks are
/// independent of d, so the degree-d' set is a prefix of the degree-d set.
class IndexSet {
public:
    IndexSet(std::size_t n, unsigned d);

    std::size_t dimension() const { return n_; }
    unsigned degree() const { return d_; }
    std::size_t size() const { return indices_.size(); }
    const MultiIndex& operator[](std::size_t rank) const { return indices_[rank]; }
    const std::vector<MultiIndex>& indices() const { return indices_; }

    /// Graded-lex rank; throws std::out_of_range if alpha is not in the set.
    std::size_t rank(const MultiIndex& alpha) const;
    /// Number of indices of degree < k (the rank of the first degree-k index).
    std::size_t degree_begin(unsigned k) const { return degree_offsets_[k]; }

    auto begin() const { return indices_.begin(); }
    auto end() const { return indices_.end(); }

private:
    std::size_t n_;
    unsigned d_;
    std::vector<MultiIndex> indices_;
    std::vector<std::size_t> degree_offsets_;
};

/// Shared, cached enumeration for (n, d).
std::shared_ptr<const IndexSet> index_set(std::size_t n, unsigned d);

/// Flattened table of the convolution sum: for output rank a, the terms
/// [offsets[a], offsets[a+1]) hold (rank beta, rank alpha-beta, C(alpha,beta)).
struct ConvolutionPlan {
    struct Term {
        std::uint32_t beta;
        std::uint32_t rest;
        std::uint64_t coefficient;
    };
    std::vector<std::size_t> offsets;
    std::vector<Term> terms;
};

std::shared_ptr<const ConvolutionPlan> convolution_plan(std::size_t n, unsigned d);

} // namespace momsynth
