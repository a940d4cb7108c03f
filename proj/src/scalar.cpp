#include "momsynth/scalar.hpp"

#include <regex>

#include "momsynth/errors.hpp"

namespace momsynth {

ComplexRational& ComplexRational::operator/=(const ComplexRational& o) {
    if (o.is_zero())
        throw std::domain_error("complex rational division by zero");
    Rational denom = o.re * o.re + o.im * o.im;
    Rational r = (re * o.re + im * o.im) / denom;
    Rational i = (im * o.re - re * o.im) / denom;
    re = std::move(r);
    im = std::move(i);
    return *this;
}

std::string_view backend_name(Backend b) {
    return b == Backend::rational ? "rational" : "float";
}

Backend parse_backend(std::string_view name) {
    if (name == "rational")
        return Backend::rational;
    if (name == "float")
        return Backend::floating;
    throw SchemaError("unknown backend '" + std::string(name) + "' (expected rational|float)");
}

std::string format_rational(const Rational& q) { return q.get_str(10); }

Rational parse_rational(std::string_view text) {
    static const std::regex pattern(R"(\s*([+-]?)(\d+)(?:/(\d+))?\s*)");
    std::match_results<std::string_view::const_iterator> m;
    if (!std::regex_match(text.begin(), text.end(), m, pattern))
        throw SchemaError("not a rational literal: '" + std::string(text) + "'");
    mpz_class num(m[2].str(), 10);
    mpz_class den = m[3].matched ? mpz_class(m[3].str(), 10) : mpz_class(1);
    if (den == 0)
        throw SchemaError("zero denominator in '" + std::string(text) + "'");
    if (m[1].str() == "-")
        num = -num;
    Rational q(num, den);
    q.canonicalize();
    return q;
}

} // namespace momsynth
