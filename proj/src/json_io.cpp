#include "momsynth/json_io.hpp"

#include <cmath>
#include <fstream>

namespace momsynth::io {

namespace {

const json& field(const json& j, const char* key) {
    if (!j.is_object())
        throw SchemaError(std::string("expected an object holding '") + key + "'");
    auto it = j.find(key);
    if (it == j.end())
        throw SchemaError(std::string("missing field '") + key + "'");
    return *it;
}

std::size_t read_count(const json& j, const char* key) {
    const json& v = field(j, key);
    if (!v.is_number_integer() || v.get<long long>() < 0)
        throw SchemaError(std::string("field '") + key + "' must be a non-negative integer");
    return v.get<std::size_t>();
}

Rational read_rational(const json& v) {
    if (v.is_string())
        return parse_rational(v.get<std::string>());
    if (v.is_number_integer())
        return Rational(mpz_class(std::to_string(v.get<long long>()), 10));
    if (v.is_number_float()) {
        const double x = v.get<double>();
        if (!std::isfinite(x))
            throw SchemaError("non-finite number");
        return Rational(x);
    }
    throw SchemaError("expected a rational string or a number, got " + v.dump());
}

double read_double(const json& v) {
    if (v.is_number())
        return v.get<double>();
    if (v.is_string())
        return parse_rational(v.get<std::string>()).get_d();
    throw SchemaError("expected a number, got " + v.dump());
}

template <class S>
S read_scalar(const json& entry) {
    const json& re = field(entry, "re");
    const json& im = field(entry, "im");
    if constexpr (ScalarTraits<S>::backend == Backend::rational)
        return ComplexRational(read_rational(re), read_rational(im));
    else
        return ComplexDouble(read_double(re), read_double(im));
}

void write_scalar(json& entry, const ComplexRational& v) {
    entry["re"] = format_rational(v.re);
    entry["im"] = format_rational(v.im);
}

void write_scalar(json& entry, const ComplexDouble& v) {
    entry["re"] = v.real();
    entry["im"] = v.imag();
}

MultiIndex read_index(const json& v, std::size_t n, const char* what) {
    if (!v.is_array() || v.size() != n)
        throw SchemaError(std::string(what) + " must be an array of " + std::to_string(n) + " integers");
    std::vector<std::uint32_t> e;
    for (const auto& x : v) {
        if (!x.is_number_integer() || x.get<long long>() < 0)
            throw SchemaError(std::string(what) + " entries must be non-negative integers");
        e.push_back(x.get<std::uint32_t>());
    }
    return MultiIndex(std::move(e));
}

json index_json(const MultiIndex& a) { return json(std::vector<std::uint32_t>(a.entries().begin(), a.entries().end())); }

template <class S>
json sequence_json(const Sequence<S>& s) {
    json entries = json::array();
    for (std::size_t r = 0; r < s.size(); ++r) {
        json e;
        e["alpha"] = index_json(s.indices()[r]);
        write_scalar(e, s[r]);
        entries.push_back(std::move(e));
    }
    return {{"n", s.dimension()},
            {"d", s.degree()},
            {"backend", std::string(backend_name(ScalarTraits<S>::backend))},
            {"entries", std::move(entries)}};
}

template <class S>
Sequence<S> read_sequence(const json& j, std::size_t n, unsigned d) {
    const json& entries = field(j, "entries");
    const auto idx = index_set(n, d);
    if (!entries.is_array() || entries.size() != idx->size())
        throw SchemaError("sequence with n=" + std::to_string(n) + ", d=" + std::to_string(d) +
                          " needs exactly " + std::to_string(idx->size()) + " entries");
    std::vector<S> values;
    values.reserve(idx->size());
    for (std::size_t r = 0; r < idx->size(); ++r) {
        const MultiIndex alpha = read_index(field(entries[r], "alpha"), n, "alpha");
        if (alpha != (*idx)[r])
            throw SchemaError("entry " + std::to_string(r) + " has alpha " + alpha.to_string() +
                              ", expected " + (*idx)[r].to_string() + " (graded-lex order)");
        values.push_back(read_scalar<S>(entries[r]));
    }
    return Sequence<S>(n, d, std::move(values));
}

template <class S>
json measure_json(const AtomicMeasure<S>& mu) {
    json atoms = json::array();
    for (const auto& a : mu.atoms()) {
        json e;
        e["y"] = index_json(a.point);
        write_scalar(e, a.weight);
        atoms.push_back(std::move(e));
    }
    return {{"n", mu.dimension()}, {"atoms", std::move(atoms)}};
}

template <class S>
AtomicMeasure<S> read_measure(const json& j) {
    const std::size_t n = read_count(j, "n");
    if (n == 0)
        throw SchemaError("measure dimension must be at least 1");
    const json& atoms = field(j, "atoms");
    if (!atoms.is_array())
        throw SchemaError("'atoms' must be an array");
    std::vector<Atom<S>> out;
    for (const auto& a : atoms)
        out.push_back({read_index(field(a, "y"), n, "y"), read_scalar<S>(a)});
    try {
        return AtomicMeasure<S>(n, std::move(out));
    } catch (const std::invalid_argument& e) {
        throw SchemaError(e.what());
    }
}

template <class S>
json synthesis_json(const SynthesizedFunction<S>& f) {
    return {{"kernel", to_json(f.kernel)},
            {"atoms", measure_json(f.measure)},
            {"t", sequence_json(f.kernel_moments)},
            {"u", sequence_json(f.measure_moments)},
            {"target", sequence_json(f.target)}};
}

template <class S>
SynthesizedFunction<S> read_synthesis(const json& j, Kernel kernel, Sequence<S> target) {
    auto t = std::get<Sequence<S>>(sequence_from_json(field(j, "t")));
    auto u = std::get<Sequence<S>>(sequence_from_json(field(j, "u")));
    auto mu = std::get<AtomicMeasure<S>>(measure_from_json(field(j, "atoms"), ScalarTraits<S>::backend));
    if (!t.same_shape(target) || !u.same_shape(target) || mu.dimension() != target.dimension() ||
        dimension_of(kernel) != target.dimension())
        throw SchemaError("synthesized function parts disagree in dimension or degree");
    return SynthesizedFunction<S>{std::move(kernel), std::move(mu), std::move(t), std::move(u),
                                  std::move(target)};
}

} // namespace

json to_json(const AnySequence& s) {
    return std::visit([](const auto& v) { return sequence_json(v); }, s);
}

AnySequence sequence_from_json(const json& j) {
    const std::size_t n = read_count(j, "n");
    const std::size_t d = read_count(j, "d");
    if (n == 0)
        throw SchemaError("sequence dimension must be at least 1");
    const json& backend = field(j, "backend");
    if (!backend.is_string())
        throw SchemaError("'backend' must be a string");
    if (parse_backend(backend.get<std::string>()) == Backend::rational)
        return read_sequence<ComplexRational>(j, n, static_cast<unsigned>(d));
    return read_sequence<ComplexDouble>(j, n, static_cast<unsigned>(d));
}

json to_json(const Kernel& g) {
    if (const auto* box = std::get_if<BoxKernel>(&g)) {
        json offset = json::array();
        for (const auto& a : box->offset)
            offset.push_back(format_rational(a));
        return {{"variant", "box"}, {"offset", std::move(offset)}};
    }
    return {{"variant", "bump"}, {"n", std::get<BumpKernel>(g).n}};
}

Kernel kernel_from_json(const json& j) {
    const json& variant = field(j, "variant");
    if (variant == "box") {
        const json& offset = field(j, "offset");
        if (!offset.is_array() || offset.empty())
            throw SchemaError("box kernel 'offset' must be a non-empty array");
        std::vector<Rational> a;
        for (const auto& v : offset)
            a.push_back(read_rational(v));
        try {
            return BoxKernel(std::move(a));
        } catch (const std::invalid_argument& e) {
            throw SchemaError(e.what());
        }
    }
    if (variant == "bump") {
        const std::size_t n = read_count(j, "n");
        if (n == 0)
            throw SchemaError("bump kernel dimension must be at least 1");
        return BumpKernel(n);
    }
    throw SchemaError("unknown kernel variant " + variant.dump());
}

json to_json(const AnyMeasure& mu) {
    return std::visit([](const auto& m) { return measure_json(m); }, mu);
}

AnyMeasure measure_from_json(const json& j, Backend backend) {
    if (backend == Backend::rational)
        return read_measure<ComplexRational>(j);
    return read_measure<ComplexDouble>(j);
}

json to_json(const AnySynthesis& f) {
    return std::visit([](const auto& v) { return synthesis_json(v); }, f);
}

AnySynthesis synthesis_from_json(const json& j) {
    Kernel kernel = kernel_from_json(field(j, "kernel"));
    AnySequence target = sequence_from_json(field(j, "target"));
    try {
        if (auto* exact = std::get_if<RationalSequence>(&target))
            return read_synthesis(j, std::move(kernel), std::move(*exact));
        return read_synthesis(j, std::move(kernel), std::move(std::get<FloatSequence>(target)));
    } catch (const std::bad_variant_access&) {
        throw SchemaError("synthesized function mixes rational and float parts");
    }
}

json to_json(const ComparisonReport& r) {
    json per_alpha = json::array();
    for (std::size_t i = 0; i < r.alphas.size(); ++i)
        per_alpha.push_back({{"alpha", index_json(r.alphas[i])}, {"abs_error", r.errors[i]}});
    json failures = json::array();
    for (const auto& a : r.failures)
        failures.push_back(index_json(a));
    json out;
    if (r.exact && r.pass)
        out["max_abs_error"] = "0 (exact)";
    else
        out["max_abs_error"] = r.max_abs_error;
    out["per_alpha"] = std::move(per_alpha);
    out["failures"] = std::move(failures);
    out["pass"] = r.pass;
    out["tolerance"] = r.tolerance;
    return out;
}

json read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw SchemaError("cannot open '" + path + "'");
    try {
        return json::parse(in);
    } catch (const json::exception& e) {
        throw SchemaError("'" + path + "': " + e.what());
    }
}

void write_file(const std::string& path, const json& j) {
    std::ofstream out(path);
    if (!out)
        throw std::runtime_error("cannot write '" + path + "'");
    out << j.dump(2) << '\n';
}

} // namespace momsynth::io
