#pragma once

#include <string>

#include <json.hpp>

#include "momsynth/atomic_rep.hpp"
#include "momsynth/kernel.hpp"
#include "momsynth/sequence.hpp"
#include "momsynth/synthesis.hpp"
#include "momsynth/verify.hpp"

namespace momsynth::io {

using nlohmann::json;

// Sequence: {"n", "d", "backend", "entries": [{"alpha", "re", "im"}, ...]},
// entries complete and in graded-lex order. Rational values are "p/q" strings.
json to_json(const AnySequence& s);
AnySequence sequence_from_json(const json& j);

// {"variant": "box", "offset": ["p/q", ...]} | {"variant": "bump", "n": int}
json to_json(const Kernel& g);
Kernel kernel_from_json(const json& j);

// {"n", "atoms": [{"y", "re", "im"}, ...]}
json to_json(const AnyMeasure& mu);
AnyMeasure measure_from_json(const json& j, Backend backend);

// {"kernel", "atoms", "t", "u", "target"}
json to_json(const AnySynthesis& f);
AnySynthesis synthesis_from_json(const json& j);

// {"max_abs_error": number | "0 (exact)", "per_alpha", "pass", "tolerance"}
json to_json(const ComparisonReport& r);

/// Reads and parses a JSON file; SchemaError on I/O or syntax failure.
json read_file(const std::string& path);
void write_file(const std::string& path, const json& j);

} // namespace momsynth::io
