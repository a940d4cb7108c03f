#include "cli_app.hpp"

#include <charconv>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "momsynth/json_io.hpp"
#include "momsynth/kernel_moments.hpp"
#include "momsynth/seq_algebra.hpp"
#include "momsynth/synthesis.hpp"
#include "momsynth/verify.hpp"

namespace momsynth::cli {

namespace {

using io::json;

/// Bad command-line usage or input content: exit 1.
struct InputError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct QuadratureFlags {
    int nodes = QuadratureConfig{}.nodes;
    int panels = QuadratureConfig{}.panels;
    double tolerance = QuadratureConfig{}.tolerance;

    void attach(CLI::App* cmd) {
        cmd->add_option("--quad-nodes", nodes, "Gauss-Legendre nodes per panel")->capture_default_str();
        cmd->add_option("--quad-panels", panels, "panels per unit interval")->capture_default_str();
        cmd->add_option("--quad-tol", tolerance, "panel-doubling tolerance")->capture_default_str();
    }

    QuadratureConfig config() const {
        QuadratureConfig c{nodes, panels, tolerance};
        try {
            c.validate();
        } catch (const std::invalid_argument& e) {
            throw InputError(e.what());
        }
        return c;
    }
};

void emit(const std::string& path, const std::string& text, std::ostream& out) {
    if (path.empty()) {
        out << text;
        return;
    }
    std::ofstream file(path);
    if (!file)
        throw InputError("cannot write '" + path + "'");
    file << text;
}

void emit_json(const std::string& path, const json& j, std::ostream& out) {
    emit(path, j.dump(2) + "\n", out);
}

AnySequence convert(AnySequence s, Backend to) {
    if (backend_of(s) == to)
        return s;
    if (to == Backend::floating)
        return to_float(std::get<RationalSequence>(s));
    return to_rational(std::get<FloatSequence>(s));
}

AnySequence truncate(const AnySequence& s, unsigned d) {
    if (d > degree_of(s))
        throw InputError("--degree " + std::to_string(d) + " exceeds the input degree " +
                         std::to_string(degree_of(s)));
    return std::visit([d](const auto& v) -> AnySequence { return v.truncated(d); }, s);
}

std::vector<Rational> parse_offset(const std::string& text, std::size_t n) {
    std::vector<Rational> out;
    std::stringstream ss(text);
    std::string part;
    while (std::getline(ss, part, ','))
        out.push_back(parse_rational(part));
    if (out.size() == 1 && n > 1)
        out.assign(n, out.front());
    if (out.size() != n)
        throw InputError("--offset has " + std::to_string(out.size()) + " components, dimension is " +
                         std::to_string(n));
    return out;
}

std::string format_double(double v) {
    char buf[64];
    auto res = std::to_chars(buf, buf + sizeof buf, v);
    return std::string(buf, res.ptr);
}

// --- subcommands -----------------------------------------------------------

struct SynthesizeArgs {
    std::string input, out, kernel = "box", offset = "0";
    std::optional<unsigned> degree;
    std::optional<std::string> backend;
    QuadratureFlags quad;
};

void cmd_synthesize(const SynthesizeArgs& a, std::ostream& out) {
    AnySequence s = io::sequence_from_json(io::read_file(a.input));
    if (a.degree)
        s = truncate(s, *a.degree);
    if (a.backend)
        s = convert(std::move(s), parse_backend(*a.backend));
    const std::size_t n = dimension_of(s);

    Kernel g = a.kernel == "box" ? Kernel(BoxKernel(parse_offset(a.offset, n))) : Kernel(BumpKernel(n));
    if (std::holds_alternative<BumpKernel>(g) && backend_of(s) == Backend::rational)
        throw InputError("the bump kernel requires the float backend (--backend float)");

    SynthesisOptions options;
    options.quadrature = a.quad.config();
    emit_json(a.out, io::to_json(synthesize(s, g, options)), out);
}

struct VerifyArgs {
    std::string function, target, out, oracle;
    std::optional<double> tolerance;
    QuadratureFlags quad;
};

ComparisonReport run_oracle(const AnySynthesis& f, const AnySequence& target, bool exact_oracle,
                            std::optional<double> tolerance, const QuadratureConfig& cfg) {
    const bool box = std::visit([](const auto& v) { return std::holds_alternative<BoxKernel>(v.kernel); }, f);
    const unsigned d = degree_of(target);
    AnySequence actual = std::visit(
        [&](const auto& v) -> AnySequence {
            if (exact_oracle)
                return integrate_moments_exact(v, d);
            return integrate_moments_quadrature(v, d, cfg);
        },
        f);
    double tol;
    if (tolerance)
        tol = *tolerance;
    else if (!box)
        tol = 1e-6;
    else if (backend_of(actual) == Backend::rational && backend_of(target) == Backend::rational)
        tol = 0.0;
    else
        tol = 1e-8;
    return compare(target, actual, tol);
}

int cmd_verify(const VerifyArgs& a, std::ostream& out) {
    const AnySynthesis f = io::synthesis_from_json(io::read_file(a.function));
    const AnySequence target = io::sequence_from_json(io::read_file(a.target));
    const auto [n, d] = std::visit([](const auto& v) { return std::pair(v.dimension(), v.degree()); }, f);
    if (n != dimension_of(target) || d != degree_of(target))
        throw InputError("function (n=" + std::to_string(n) + ", d=" + std::to_string(d) +
                         ") and target (n=" + std::to_string(dimension_of(target)) + ", d=" +
                         std::to_string(degree_of(target)) + ") do not match");
    if (a.tolerance && !(*a.tolerance >= 0.0))
        throw InputError("--tolerance must be non-negative");

    const bool box = std::visit([](const auto& v) { return std::holds_alternative<BoxKernel>(v.kernel); }, f);
    std::string oracle = a.oracle.empty() ? (box ? "exact" : "quadrature") : a.oracle;
    if (oracle != "quadrature" && !box)
        throw InputError("the exact oracle needs a box kernel; use --oracle quadrature");

    const QuadratureConfig cfg = a.quad.config();
    bool pass = true;
    json doc;
    if (oracle == "both") {
        const auto exact = run_oracle(f, target, true, a.tolerance, cfg);
        const auto quad = run_oracle(f, target, false, a.tolerance, cfg);
        pass = exact.pass && quad.pass;
        doc = {{"exact", io::to_json(exact)}, {"quadrature", io::to_json(quad)}};
    } else {
        const auto report = run_oracle(f, target, oracle == "exact", a.tolerance, cfg);
        pass = report.pass;
        doc = io::to_json(report);
    }
    emit_json(a.out, doc, out);
    return pass ? ok : verification_failed;
}

struct SampleArgs {
    std::string function, out;
    int points = 101;
};

void cmd_sample(const SampleArgs& a, std::ostream& out) {
    if (a.points < 1)
        throw InputError("--points must be at least 1");
    const AnySynthesis f = io::synthesis_from_json(io::read_file(a.function));
    const std::size_t n = std::visit([](const auto& v) { return v.dimension(); }, f);
    if (n > 2)
        throw InputError("sampling supports dimension 1 or 2, function has dimension " + std::to_string(n));

    AxisBox box = std::visit([](const auto& v) { return support_bound(v); }, f);
    if (box.empty()) {
        box.lower.assign(n, 0.0);
        box.upper.assign(n, 1.0);
    }
    const auto coordinate = [&](std::size_t axis, int k) {
        if (a.points == 1)
            return box.lower[axis];
        if (k == a.points - 1)
            return box.upper[axis];
        return box.lower[axis] + (box.upper[axis] - box.lower[axis]) * k / (a.points - 1);
    };

    std::ostringstream csv;
    csv << (n == 1 ? "x,re,im\n" : "x1,x2,re,im\n");
    const int outer = a.points;
    const int inner = n == 2 ? a.points : 1;
    std::vector<double> x(n);
    for (int i = 0; i < outer; ++i) {
        for (int j = 0; j < inner; ++j) {
            x[0] = coordinate(0, i);
            if (n == 2)
                x[1] = coordinate(1, j);
            const ComplexDouble v = std::visit([&](const auto& fn) { return evaluate(fn, x); }, f);
            for (double xi : x)
                csv << format_double(xi) << ',';
            csv << format_double(v.real() + 0.0) << ',' << format_double(v.imag() + 0.0) << '\n';
        }
    }
    emit(a.out, csv.str(), out);
}

struct ConvolveArgs {
    std::string left, right, out;
};

void cmd_convolve(const ConvolveArgs& a, std::ostream& out) {
    const AnySequence s = io::sequence_from_json(io::read_file(a.left));
    const AnySequence t = io::sequence_from_json(io::read_file(a.right));
    if (backend_of(s) != backend_of(t))
        throw InputError("cannot convolve a rational sequence with a float sequence");
    AnySequence u = std::visit(
        [&](const auto& lhs) -> AnySequence {
            using Seq = std::decay_t<decltype(lhs)>;
            return convolve(lhs, std::get<Seq>(t));
        },
        s);
    emit_json(a.out, io::to_json(u), out);
}

struct InvertArgs {
    std::string input, out;
    double threshold = InverseOptions{}.zero_threshold;
};

void cmd_invert(const InvertArgs& a, std::ostream& out) {
    const AnySequence t = io::sequence_from_json(io::read_file(a.input));
    InverseOptions options;
    options.zero_threshold = a.threshold;
    AnySequence u = std::visit([&](const auto& v) -> AnySequence { return inverse(v, options); }, t);
    emit_json(a.out, io::to_json(u), out);
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Synthesize functions with prescribed truncated moments"};
    app.require_subcommand(1);

    SynthesizeArgs syn;
    auto* synthesize_cmd = app.add_subcommand("synthesize", "build f = sum_y c_y g(x - y) with the target moments");
    synthesize_cmd->add_option("--input", syn.input, "target sequence JSON")->required();
    synthesize_cmd->add_option("--out", syn.out, "output file (default: stdout)");
    synthesize_cmd->add_option("--kernel", syn.kernel)->check(CLI::IsMember({"box", "bump"}))->capture_default_str();
    synthesize_cmd->add_option("--offset", syn.offset, "box offset, one value or comma list of p/q")->capture_default_str();
    synthesize_cmd->add_option("--degree", syn.degree, "truncate the target to this degree");
    synthesize_cmd->add_option("--backend", syn.backend)->check(CLI::IsMember({"rational", "float"}));
    syn.quad.attach(synthesize_cmd);

    VerifyArgs ver;
    auto* verify_cmd = app.add_subcommand("verify", "integrate f independently and compare with a target");
    verify_cmd->add_option("--function", ver.function, "synthesized function JSON")->required();
    verify_cmd->add_option("--target", ver.target, "target sequence JSON")->required();
    verify_cmd->add_option("--out", ver.out, "report file (default: stdout)");
    verify_cmd->add_option("--oracle", ver.oracle, "exact | quadrature | both")
        ->check(CLI::IsMember({"exact", "quadrature", "both"}));
    verify_cmd->add_option("--tolerance", ver.tolerance, "absolute tolerance");
    ver.quad.attach(verify_cmd);

    ConvolveArgs conv;
    auto* convolve_cmd = app.add_subcommand("convolve", "binomial convolution of two sequences");
    convolve_cmd->add_option("left", conv.left)->required();
    convolve_cmd->add_option("right", conv.right)->required();
    convolve_cmd->add_option("--out", conv.out);

    InvertArgs inv;
    auto* invert_cmd = app.add_subcommand("invert", "convolution inverse of a sequence");
    invert_cmd->add_option("input", inv.input)->required();
    invert_cmd->add_option("--out", inv.out);
    invert_cmd->add_option("--threshold", inv.threshold, "float backend zero threshold for t_0")->capture_default_str();

    SampleArgs smp;
    auto* sample_cmd = app.add_subcommand("sample", "CSV samples of f on a grid over its support bound");
    sample_cmd->add_option("--function", smp.function)->required();
    sample_cmd->add_option("--points", smp.points, "grid points per axis")->capture_default_str();
    sample_cmd->add_option("--out", smp.out);

    std::vector<const char*> argv;
    for (const auto& a : args)
        argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? ok : input_error;
    }

    try {
        if (*synthesize_cmd)
            cmd_synthesize(syn, out);
        else if (*verify_cmd)
            return cmd_verify(ver, out);
        else if (*convolve_cmd)
            cmd_convolve(conv, out);
        else if (*invert_cmd)
            cmd_invert(inv, out);
        else if (*sample_cmd)
            cmd_sample(smp, out);
        return ok;
    } catch (const InputError& e) {
        err << "error: " << e.what() << '\n';
        return input_error;
    } catch (const SchemaError& e) {
        err << "schema error: " << e.what() << '\n';
        return input_error;
    } catch (const ShapeMismatch& e) {
        err << "error: " << e.what() << '\n';
        return input_error;
    } catch (const BackendMismatch& e) {
        err << "error: " << e.what() << '\n';
        return input_error;
    } catch (const json::exception& e) {
        err << "schema error: " << e.what() << '\n';
        return input_error;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << '\n';
        return input_error;
    } catch (const Error& e) {
        err << "pipeline error: " << e.what() << '\n';
        return pipeline_error;
    } catch (const std::exception& e) {
        err << "pipeline error: " << e.what() << '\n';
        return pipeline_error;
    }
}

} // namespace momsynth::cli
