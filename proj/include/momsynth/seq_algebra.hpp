#pragma once

#include "momsynth/sequence.hpp"

namespace momsynth {

/// Moments of the Dirac measure at the origin: e_0 = 1, every other entry 0.
template <class S>
Sequence<S> identity(std::size_t n, unsigned d);

/// u_alpha = sum_{beta <= alpha} C(alpha, beta) s_beta t_{alpha-beta}.
/// Output entries are computed in parallel with OpenMP.
template <class S>
Sequence<S> convolve(const Sequence<S>& s, const Sequence<S>& t);

struct InverseOptions {
    /// Float backend only: |t_0| at or below this counts as zero.
    double zero_threshold = 1e-12;
};

/// Convolution inverse, by the triangular recursion
///   u_0 = 1/t_0,  u_alpha = -(1/t_0) sum_{beta < alpha, beta <= alpha} C(alpha,beta) t_{alpha-beta} u_beta.
/// Entries of one degree only depend on lower degrees, so each degree is
/// filled in parallel. Throws ZeroConstantTerm.
template <class S>
Sequence<S> inverse(const Sequence<S>& t, const InverseOptions& options = {});

template <class S>
Sequence<S> add(const Sequence<S>& a, const Sequence<S>& b);

template <class S>
Sequence<S> scale(const S& factor, const Sequence<S>& s);

/// Exact rational values rounded to double.
FloatSequence to_float(const RationalSequence& s);
/// Exact binary value of every double as a rational.
RationalSequence to_rational(const FloatSequence& s);

namespace reference {

/// Direct transcription of the convolution sum: enumerates sub-indices and
/// recomputes every binomial, shares no tables with convolve().
template <class S>
Sequence<S> convolve_serial(const Sequence<S>& s, const Sequence<S>& t);

template <class S>
Sequence<S> inverse_serial(const Sequence<S>& t, const InverseOptions& options = {});

} // namespace reference

} // namespace momsynth
