#include "momsynth/atomic_rep.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

#include <Eigen/Dense>

namespace momsynth {

template <class S>
AtomicMeasure<S>::AtomicMeasure(std::size_t n, std::vector<Atom<S>> atoms)
    : n_(n), atoms_(std::move(atoms)) {
    std::vector<MultiIndex> points;
    points.reserve(atoms_.size());
    for (const auto& a : atoms_) {
        if (a.point.size() != n_)
            throw ShapeMismatch("atom " + a.point.to_string() + " does not live in dimension " +
                                std::to_string(n_));
        points.push_back(a.point);
    }
    std::sort(points.begin(), points.end());
    if (std::adjacent_find(points.begin(), points.end()) != points.end())
        throw std::invalid_argument("atomic measure has repeated atom points");
}

template <class S>
double AtomicMeasure<S>::total_variation() const {
    double tv = 0.0;
    for (const auto& a : atoms_)
        tv += ScalarTraits<S>::magnitude(a.weight);
    return tv;
}

template class AtomicMeasure<ComplexRational>;
template class AtomicMeasure<ComplexDouble>;

std::vector<MultiIndex> choose_atoms(std::size_t n, unsigned d) { return index_set(n, d)->indices(); }

namespace {

mpz_class monomial_exact(const MultiIndex& y, const MultiIndex& alpha) {
    mpz_class v(1);
    for (std::size_t i = 0; i < y.size(); ++i) {
        mpz_class p;
        mpz_ui_pow_ui(p.get_mpz_t(), y[i], alpha[i]);
        v *= p;
    }
    return v;
}

template <class S>
S monomial(const MultiIndex& y, const MultiIndex& alpha) {
    if constexpr (ScalarTraits<S>::backend == Backend::rational) {
        return ComplexRational(Rational(monomial_exact(y, alpha)));
    } else {
        double v = 1.0;
        for (std::size_t i = 0; i < y.size(); ++i)
            v *= std::pow(static_cast<double>(y[i]), static_cast<double>(alpha[i]));
        return {v, 0.0};
    }
}

// Partial-pivoting elimination of A x = b for a real rational A and the two
// real right-hand sides b_re, b_im. A, b_re, b_im are overwritten.
std::vector<ComplexRational> eliminate(std::vector<Rational> a, std::vector<Rational> b_re,
                                       std::vector<Rational> b_im, std::size_t size, bool parallel) {
    auto at = [&](std::size_t r, std::size_t c) -> Rational& { return a[r * size + c]; };

    for (std::size_t k = 0; k < size; ++k) {
        std::size_t pivot = k;
        for (std::size_t r = k + 1; r < size; ++r)
            if (cmp(abs(at(r, k)), abs(at(pivot, k))) > 0)
                pivot = r;
        if (sgn(at(pivot, k)) == 0)
            throw SingularSystem("moment system is singular at column " + std::to_string(k));
        if (pivot != k) {
            for (std::size_t c = k; c < size; ++c)
                std::swap(at(k, c), at(pivot, c));
            std::swap(b_re[k], b_re[pivot]);
            std::swap(b_im[k], b_im[pivot]);
        }

        const auto first = static_cast<std::ptrdiff_t>(k + 1);
        const auto last = static_cast<std::ptrdiff_t>(size);
#pragma omp parallel for schedule(dynamic) if (parallel && size - k > 8)
        for (std::ptrdiff_t r = first; r < last; ++r) {
            const auto row = static_cast<std::size_t>(r);
            if (sgn(at(row, k)) == 0)
                continue;
            const Rational factor = at(row, k) / at(k, k);
            at(row, k) = 0;
            for (std::size_t c = k + 1; c < size; ++c)
                if (sgn(at(k, c)) != 0)
                    at(row, c) -= factor * at(k, c);
            b_re[row] -= factor * b_re[k];
            b_im[row] -= factor * b_im[k];
        }
    }

    std::vector<ComplexRational> x(size);
    for (std::size_t i = size; i-- > 0;) {
        Rational re = b_re[i];
        Rational im = b_im[i];
        for (std::size_t c = i + 1; c < size; ++c) {
            if (sgn(at(i, c)) == 0)
                continue;
            re -= at(i, c) * x[c].re;
            im -= at(i, c) * x[c].im;
        }
        x[i] = ComplexRational(Rational(re / at(i, i)), Rational(im / at(i, i)));
    }
    return x;
}

RationalMeasure solve_rational(const RationalSequence& target, bool parallel) {
    const auto system = build_moment_system(target.dimension(), target.degree());
    const std::size_t size = system.order();
    std::vector<Rational> b_re, b_im;
    b_re.reserve(size);
    b_im.reserve(size);
    for (const auto& v : target.values()) {
        b_re.push_back(v.re);
        b_im.push_back(v.im);
    }
    auto weights = eliminate(system.matrix, std::move(b_re), std::move(b_im), size, parallel);
    std::vector<Atom<ComplexRational>> atoms;
    atoms.reserve(size);
    for (std::size_t j = 0; j < size; ++j)
        atoms.push_back({system.atoms[j], std::move(weights[j])});
    return RationalMeasure(target.dimension(), std::move(atoms));
}

} // namespace

MomentSystem build_moment_system(std::size_t n, unsigned d) {
    MomentSystem sys{n, d, choose_atoms(n, d), {}};
    const auto& rows = index_set(n, d)->indices();
    const std::size_t size = sys.atoms.size();
    sys.matrix.resize(size * size);
    const auto count = static_cast<std::ptrdiff_t>(size);
#pragma omp parallel for if (size > 64)
    for (std::ptrdiff_t r = 0; r < count; ++r)
        for (std::size_t c = 0; c < size; ++c)
            sys.matrix[static_cast<std::size_t>(r) * size + c] =
                Rational(monomial_exact(sys.atoms[c], rows[static_cast<std::size_t>(r)]));
    return sys;
}

RationalMeasure solve_measure(const RationalSequence& target) { return solve_rational(target, true); }

FloatMeasure solve_measure(const FloatSequence& target, const SolveOptions& options) {
    const std::size_t n = target.dimension();
    const auto atoms = choose_atoms(n, target.degree());
    const auto& rows = target.indices().indices();
    const auto size = static_cast<Eigen::Index>(atoms.size());

    Eigen::MatrixXd v(size, size);
    Eigen::VectorXd rhs_re(size), rhs_im(size);
    for (Eigen::Index r = 0; r < size; ++r) {
        for (Eigen::Index c = 0; c < size; ++c)
            v(r, c) = monomial<ComplexDouble>(atoms[static_cast<std::size_t>(c)],
                                              rows[static_cast<std::size_t>(r)])
                          .real();
        rhs_re(r) = target[static_cast<std::size_t>(r)].real();
        rhs_im(r) = target[static_cast<std::size_t>(r)].imag();
    }

    Eigen::PartialPivLU<Eigen::MatrixXd> lu(v);
    const Eigen::VectorXd c_re = lu.solve(rhs_re);
    const Eigen::VectorXd c_im = lu.solve(rhs_im);

    const Eigen::VectorXcd weights = c_re.cast<ComplexDouble>() + ComplexDouble(0, 1) * c_im.cast<ComplexDouble>();
    const Eigen::VectorXcd rhs = rhs_re.cast<ComplexDouble>() + ComplexDouble(0, 1) * rhs_im.cast<ComplexDouble>();
    const Eigen::VectorXcd residual = v.cast<ComplexDouble>() * weights - rhs;
    const double res_norm = residual.size() ? residual.cwiseAbs().maxCoeff() : 0.0;
    const double rhs_norm = rhs.size() ? rhs.cwiseAbs().maxCoeff() : 0.0;
    const double bound = options.residual_factor * (1.0 + rhs_norm);
    if (!(res_norm <= bound)) {
        std::ostringstream msg;
        msg << "moment system residual " << res_norm << " exceeds " << bound << " (n=" << n
            << ", d=" << target.degree() << ")";
        throw ResidualTooLarge(msg.str());
    }

    std::vector<Atom<ComplexDouble>> out;
    out.reserve(atoms.size());
    for (Eigen::Index j = 0; j < size; ++j)
        out.push_back({atoms[static_cast<std::size_t>(j)], weights(j)});
    return FloatMeasure(n, std::move(out));
}

template <class S>
Sequence<S> measure_moments(const AtomicMeasure<S>& mu, unsigned d) {
    const auto idx = index_set(mu.dimension(), d);
    std::vector<S> out(idx->size(), ScalarTraits<S>::zero());
    const auto count = static_cast<std::ptrdiff_t>(idx->size());
#pragma omp parallel for if (idx->size() * mu.size() > 4096)
    for (std::ptrdiff_t r = 0; r < count; ++r) {
        const auto& alpha = (*idx)[static_cast<std::size_t>(r)];
        S acc = ScalarTraits<S>::zero();
        for (const auto& atom : mu.atoms())
            acc += atom.weight * monomial<S>(atom.point, alpha);
        out[static_cast<std::size_t>(r)] = std::move(acc);
    }
    return Sequence<S>(mu.dimension(), d, std::move(out));
}

template Sequence<ComplexRational> measure_moments(const AtomicMeasure<ComplexRational>&, unsigned);
template Sequence<ComplexDouble> measure_moments(const AtomicMeasure<ComplexDouble>&, unsigned);

namespace reference {

RationalMeasure solve_measure_serial(const RationalSequence& target) {
    return solve_rational(target, false);
}

} // namespace reference

} // namespace momsynth
