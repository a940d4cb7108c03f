#include "momsynth/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <memory>
#include <stdexcept>

#include <gsl/gsl_integration.h>

namespace momsynth {

void QuadratureConfig::validate() const {
    if (nodes < 2)
        throw std::invalid_argument("quadrature needs at least 2 nodes per panel");
    if (panels < 1)
        throw std::invalid_argument("quadrature needs at least 1 panel");
    if (!(tolerance > 0.0))
        throw std::invalid_argument("quadrature tolerance must be positive");
}

QuadratureConfig QuadratureConfig::refined() const {
    QuadratureConfig c = *this;
    c.panels *= 2;
    return c;
}

Rule1D gauss_legendre(int nodes, double lo, double hi) {
    std::unique_ptr<gsl_integration_glfixed_table, decltype(&gsl_integration_glfixed_table_free)>
        table(gsl_integration_glfixed_table_alloc(static_cast<std::size_t>(nodes)),
              &gsl_integration_glfixed_table_free);
    if (!table)
        throw std::runtime_error("could not build a Gauss-Legendre table");
    Rule1D rule;
    rule.x.resize(static_cast<std::size_t>(nodes));
    rule.w.resize(static_cast<std::size_t>(nodes));
    for (std::size_t i = 0; i < rule.x.size(); ++i)
        gsl_integration_glfixed_point(lo, hi, i, &rule.x[i], &rule.w[i], table.get());
    return rule;
}

namespace {

// Appends the [-1, 1] rule `base` mapped onto each of `panels` equal panels of [lo, hi].
void append_panels(Rule1D& into, const Rule1D& base, double lo, double hi, int panels) {
    const double h = (hi - lo) / panels;
    for (int p = 0; p < panels; ++p) {
        const double a = lo + p * h;
        const double b = (p + 1 == panels) ? hi : lo + (p + 1) * h;
        const double mid = 0.5 * (a + b);
        const double half = 0.5 * (b - a);
        for (std::size_t i = 0; i < base.size(); ++i) {
            into.x.push_back(mid + half * base.x[i]);
            into.w.push_back(half * base.w[i]);
        }
    }
}

} // namespace

Rule1D composite_rule(double lo, double hi, int nodes, int panels) {
    Rule1D rule;
    append_panels(rule, gauss_legendre(nodes, -1.0, 1.0), lo, hi, panels);
    return rule;
}

Rule1D aligned_rule(double lo, double hi, int nodes, int panels) {
    const Rule1D base = gauss_legendre(nodes, -1.0, 1.0);
    Rule1D rule;
    for (long k = 0; lo + static_cast<double>(k) < hi; ++k) {
        const double a = lo + static_cast<double>(k);
        append_panels(rule, base, a, std::min(a + 1.0, hi), panels);
    }
    return rule;
}

bool within_tolerance(double coarse_minus_fine, double fine_magnitude, double tolerance) {
    return std::abs(coarse_minus_fine) <= tolerance * std::max(1.0, fine_magnitude);
}

} // namespace momsynth
