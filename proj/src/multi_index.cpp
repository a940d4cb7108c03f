#include "momsynth/multi_index.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <stdexcept>
#include <utility>

#include "momsynth/errors.hpp"

namespace momsynth {

unsigned MultiIndex::degree() const {
    return std::accumulate(entries_.begin(), entries_.end(), 0u);
}

bool MultiIndex::dominated_by(const MultiIndex& alpha) const {
    if (alpha.size() != size())
        return false;
    for (std::size_t i = 0; i < size(); ++i)
        if (entries_[i] > alpha.entries_[i])
            return false;
    return true;
}

MultiIndex MultiIndex::minus(const MultiIndex& beta) const {
    if (!beta.dominated_by(*this))
        throw std::domain_error("multi-index difference " + to_string() + " - " + beta.to_string() +
                                " leaves N_0^n");
    std::vector<std::uint32_t> out(size());
    for (std::size_t i = 0; i < size(); ++i)
        out[i] = entries_[i] - beta.entries_[i];
    return MultiIndex(std::move(out));
}

std::string MultiIndex::to_string() const {
    std::string s = "(";
    for (std::size_t i = 0; i < size(); ++i) {
        if (i)
            s += ",";
        s += std::to_string(entries_[i]);
    }
    return s + ")";
}

std::strong_ordering operator<=>(const MultiIndex& a, const MultiIndex& b) {
    if (auto c = a.degree() <=> b.degree(); c != 0)
        return c;
    return std::lexicographical_compare_three_way(a.entries_.begin(), a.entries_.end(),
                                                  b.entries_.begin(), b.entries_.end());
}

namespace {

std::uint64_t scalar_binomial(std::uint64_t n, std::uint64_t k) {
    k = std::min(k, n - k);
    std::uint64_t r = 1;
    for (std::uint64_t i = 1; i <= k; ++i) {
        // r * (n-k+i) / i stays integral at every step
        unsigned __int128 wide = static_cast<unsigned __int128>(r) * (n - k + i);
        wide /= i;
        if (wide > UINT64_MAX)
            throw std::overflow_error("binomial coefficient exceeds 64 bits");
        r = static_cast<std::uint64_t>(wide);
    }
    return r;
}

} // namespace

std::uint64_t binomial(const MultiIndex& alpha, const MultiIndex& beta) {
    if (alpha.size() != beta.size())
        throw ShapeMismatch("binomial: dimension mismatch " + alpha.to_string() + " vs " +
                            beta.to_string());
    if (!beta.dominated_by(alpha))
        throw std::domain_error("binomial: " + beta.to_string() + " is not dominated by " +
                                alpha.to_string());
    std::uint64_t r = 1;
    for (std::size_t i = 0; i < alpha.size(); ++i)
        if (__builtin_mul_overflow(r, scalar_binomial(alpha[i], beta[i]), &r))
            throw std::overflow_error("binomial coefficient exceeds 64 bits");
    return r;
}

std::size_t index_count(std::size_t n, unsigned d) {
    return static_cast<std::size_t>(scalar_binomial(n + d, d));
}

namespace {

// Appends every n-tuple with entry sum `remaining` in lexicographic order.
void enumerate_degree(std::vector<std::uint32_t>& prefix, std::size_t n, unsigned remaining,
                      std::vector<MultiIndex>& out) {
    if (prefix.size() + 1 == n) {
        prefix.push_back(remaining);
        out.emplace_back(prefix);
        prefix.pop_back();
        return;
    }
    for (unsigned v = 0; v <= remaining; ++v) {
        prefix.push_back(v);
        enumerate_degree(prefix, n, remaining - v, out);
        prefix.pop_back();
    }
}

} // namespace

IndexSet::IndexSet(std::size_t n, unsigned d) : n_(n), d_(d) {
    if (n == 0)
        throw std::invalid_argument("multi-index dimension must be at least 1");
    indices_.reserve(index_count(n, d));
    std::vector<std::uint32_t> prefix;
    for (unsigned k = 0; k <= d; ++k) {
        degree_offsets_.push_back(indices_.size());
        enumerate_degree(prefix, n, k, indices_);
    }
    degree_offsets_.push_back(indices_.size());
}

std::size_t IndexSet::rank(const MultiIndex& alpha) const {
    if (alpha.size() != n_ || alpha.degree() > d_)
        throw std::out_of_range("multi-index " + alpha.to_string() + " outside the index set");
    auto first = indices_.begin() + static_cast<std::ptrdiff_t>(degree_offsets_[alpha.degree()]);
    auto last = indices_.begin() + static_cast<std::ptrdiff_t>(degree_offsets_[alpha.degree() + 1]);
    auto it = std::lower_bound(first, last, alpha);
    return static_cast<std::size_t>(it - indices_.begin());
}

namespace {

template <class T, class Make>
std::shared_ptr<const T> cached(std::size_t n, unsigned d, Make make) {
    static std::mutex mutex;
    static std::map<std::pair<std::size_t, unsigned>, std::shared_ptr<const T>> cache;
    std::lock_guard lock(mutex);
    auto& slot = cache[{n, d}];
    if (!slot)
        slot = make();
    return slot;
}

} // namespace

std::shared_ptr<const IndexSet> index_set(std::size_t n, unsigned d) {
    return cached<IndexSet>(n, d, [&] { return std::make_shared<const IndexSet>(n, d); });
}

std::shared_ptr<const ConvolutionPlan> convolution_plan(std::size_t n, unsigned d) {
    auto idx = index_set(n, d);
    return cached<ConvolutionPlan>(n, d, [&] {
        auto plan = std::make_shared<ConvolutionPlan>();
        plan->offsets.reserve(idx->size() + 1);
        plan->offsets.push_back(0);
        for (const auto& alpha : *idx) {
            // Walk every beta <= alpha with an odometer over the box [0, alpha].
            std::vector<std::uint32_t> beta(n, 0);
            while (true) {
                MultiIndex b(beta);
                MultiIndex rest = alpha.minus(b);
                plan->terms.push_back({static_cast<std::uint32_t>(idx->rank(b)),
                                       static_cast<std::uint32_t>(idx->rank(rest)),
                                       binomial(alpha, b)});
                std::size_t i = 0;
                while (i < n && beta[i] == alpha[i])
                    beta[i++] = 0;
                if (i == n)
                    break;
                ++beta[i];
            }
            plan->offsets.push_back(plan->terms.size());
        }
        return std::shared_ptr<const ConvolutionPlan>(std::move(plan));
    });
}

} // namespace momsynth
