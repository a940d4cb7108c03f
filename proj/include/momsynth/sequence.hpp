#pragma once

#include <cstddef>
#include <functional>
#include <memory>
#include <span>
#include <variant>
#include <vector>

#include "momsynth/errors.hpp"
#include "momsynth/multi_index.hpp"
#include "momsynth/scalar.hpp"

namespace momsynth {

/// The values s_alpha for every |alpha| <= d, stored densely by graded-lex rank.
/// The scalar type fixes the backend; a rational and a float sequence can
/// never enter the same operation.
template <class S>
class Sequence {
public:
    using scalar_type = S;

    /// All-zero sequence.
    Sequence(std::size_t n, unsigned d)
        : indices_(index_set(n, d)), values_(indices_->size(), ScalarTraits<S>::zero()) {}

    Sequence(std::size_t n, unsigned d, std::vector<S> values)
        : indices_(index_set(n, d)), values_(std::move(values)) {
        if (values_.size() != indices_->size())
            throw ShapeMismatch("sequence of dimension " + std::to_string(n) + ", degree " +
                                std::to_string(d) + " needs " + std::to_string(indices_->size()) +
                                " entries, got " + std::to_string(values_.size()));
    }

    /// Fills entry alpha with fn(alpha).
    static Sequence generate(std::size_t n, unsigned d,
                             const std::function<S(const MultiIndex&)>& fn) {
        auto idx = index_set(n, d);
        std::vector<S> values;
        values.reserve(idx->size());
        for (const auto& alpha : *idx)
            values.push_back(fn(alpha));
        return Sequence(n, d, std::move(values));
    }

    std::size_t dimension() const { return indices_->dimension(); }
    unsigned degree() const { return indices_->degree(); }
    std::size_t size() const { return values_.size(); }
    const IndexSet& indices() const { return *indices_; }

    const S& operator[](std::size_t rank) const { return values_[rank]; }
    const S& at(const MultiIndex& alpha) const { return values_[indices_->rank(alpha)]; }
    std::span<const S> values() const { return values_; }

    /// Same sequence cut down to degree d' <= d (a prefix by rank).
    Sequence truncated(unsigned d) const {
        if (d > degree())
            throw ShapeMismatch("cannot truncate degree " + std::to_string(degree()) +
                                " sequence to degree " + std::to_string(d));
        std::vector<S> values(values_.begin(),
                              values_.begin() + static_cast<std::ptrdiff_t>(index_count(dimension(), d)));
        return Sequence(dimension(), d, std::move(values));
    }

    bool same_shape(const Sequence& o) const {
        return dimension() == o.dimension() && degree() == o.degree();
    }

    friend bool operator==(const Sequence& a, const Sequence& b) {
        return a.same_shape(b) && a.values_ == b.values_;
    }

private:
    std::shared_ptr<const IndexSet> indices_;
    std::vector<S> values_;
};

using RationalSequence = Sequence<ComplexRational>;
using FloatSequence = Sequence<ComplexDouble>;
using AnySequence = std::variant<RationalSequence, FloatSequence>;

template <class S>
void require_same_shape(const Sequence<S>& a, const Sequence<S>& b, const char* what) {
    if (!a.same_shape(b))
        throw ShapeMismatch(std::string(what) + ": shapes (n=" + std::to_string(a.dimension()) +
                            ", d=" + std::to_string(a.degree()) + ") and (n=" +
                            std::to_string(b.dimension()) + ", d=" + std::to_string(b.degree()) +
                            ") differ");
}

inline Backend backend_of(const AnySequence& s) {
    return s.index() == 0 ? Backend::rational : Backend::floating;
}

inline std::size_t dimension_of(const AnySequence& s) {
    return std::visit([](const auto& v) { return v.dimension(); }, s);
}

inline unsigned degree_of(const AnySequence& s) {
    return std::visit([](const auto& v) { return v.degree(); }, s);
}

} // namespace momsynth
