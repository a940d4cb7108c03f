#pragma once

#include <cstddef>
#include <variant>
#include <vector>

#include "momsynth/multi_index.hpp"
#include "momsynth/sequence.hpp"

namespace momsynth {

template <class S>
struct Atom {
    MultiIndex point;
    S weight;

    friend bool operator==(const Atom&, const Atom&) = default;
};

/// Finite complex measure sum_y c_y delta_y on lattice points of N_0^n.
template <class S>
class AtomicMeasure {
public:
    /// Throws ShapeMismatch if a point has the wrong dimension and
    /// std::invalid_argument if two atoms share a point.
    AtomicMeasure(std::size_t n, std::vector<Atom<S>> atoms);

    std::size_t dimension() const { return n_; }
    const std::vector<Atom<S>>& atoms() const { return atoms_; }
    std::size_t size() const { return atoms_.size(); }

    /// sum_y |c_y|
    double total_variation() const;

    friend bool operator==(const AtomicMeasure&, const AtomicMeasure&) = default;

private:
    std::size_t n_;
    std::vector<Atom<S>> atoms_;
};

using RationalMeasure = AtomicMeasure<ComplexRational>;
using FloatMeasure = AtomicMeasure<ComplexDouble>;
using AnyMeasure = std::variant<RationalMeasure, FloatMeasure>;

/// The principal lattice {y in N_0^n : |y| <= d}, graded-lex.
std::vector<MultiIndex> choose_atoms(std::size_t n, unsigned d);

/// Square system V c = s with V[alpha][y] = y^alpha over the principal lattice.
struct MomentSystem {
    std::size_t n;
    unsigned d;
    std::vector<MultiIndex> atoms;
    /// Row-major, rows by graded-lex rank of alpha, columns by atom.
    std::vector<Rational> matrix;

    std::size_t order() const { return atoms.size(); }
    const Rational& operator()(std::size_t row, std::size_t col) const {
        return matrix[row * atoms.size() + col];
    }
};

MomentSystem build_moment_system(std::size_t n, unsigned d);

struct SolveOptions {
    /// Float backend: accept when ||V c - s||_inf <= residual_factor * (1 + ||s||_inf).
    double residual_factor = 1e-8;
};

/// Exact solve on the principal lattice: Gaussian elimination with partial
/// pivoting over the rationals. Row updates below each pivot run in parallel.
RationalMeasure solve_measure(const RationalSequence& target);

/// Pivoted LU in double precision followed by a residual check
/// (throws ResidualTooLarge). Random targets pass up to d = 8; from d = 10 on the
/// rounding floor of the unscaled Vandermonde exceeds the residual bound.
FloatMeasure solve_measure(const FloatSequence& target, const SolveOptions& options = {});

/// s_alpha = sum_y c_y y^alpha for |alpha| <= d.
template <class S>
Sequence<S> measure_moments(const AtomicMeasure<S>& mu, unsigned d);

namespace reference {

/// Same elimination as solve_measure(), single-threaded.
RationalMeasure solve_measure_serial(const RationalSequence& target);

} // namespace reference

} // namespace momsynth
