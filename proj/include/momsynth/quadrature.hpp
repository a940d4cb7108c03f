#pragma once

#include <cstddef>
#include <vector>

namespace momsynth {

struct QuadratureConfig {
    /// Gauss-Legendre nodes per panel.
    int nodes = 64;
    /// Panels per unit interval along each coordinate.
    int panels = 4;
    /// Largest change allowed when the panel count is doubled.
    double tolerance = 1e-10;

    /// Throws std::invalid_argument unless nodes >= 2, panels >= 1, tolerance > 0.
    void validate() const;
    QuadratureConfig refined() const;
};

/// Nodes and weights of a one-dimensional rule.
struct Rule1D {
    std::vector<double> x;
    std::vector<double> w;
    std::size_t size() const { return x.size(); }
};

/// Gauss-Legendre rule with `nodes` points on [lo, hi].
Rule1D gauss_legendre(int nodes, double lo, double hi);

/// Composite rule: [lo, hi] split into `panels` equal panels, each with a
/// `nodes`-point Gauss-Legendre rule.
Rule1D composite_rule(double lo, double hi, int nodes, int panels);

/// Composite rule whose panel boundaries include every point lo + k (k integer)
/// inside [lo, hi]; each unit cell is split into `panels` panels. A trailing
/// partial cell is kept.
Rule1D aligned_rule(double lo, double hi, int nodes, int panels);

/// Converged-change test shared by the panel-doubling checks:
/// |coarse - fine| <= tolerance * max(1, |fine|).
bool within_tolerance(double coarse_minus_fine, double fine_magnitude, double tolerance);

} // namespace momsynth
