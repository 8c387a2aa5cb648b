#ifndef HYPERENT_IO_HPP
#define HYPERENT_IO_HPP

#include <string>

#include "hyperent/enumerate.hpp"
#include "hyperent/hypergraph.hpp"

namespace hyperent {

enum class Format { Text, Json, Csv };

Format format_from_string(const std::string& name);

/// Parses either format:
///   text: header "k n m" followed by m lines of k vertex indices
///   json: {"k":K,"n":N,"edges":[[...],...]}, raw or wrapped under a
///         top-level "hypergraph" key
/// Syntax problems raise SyntaxError with line/position context; validation
/// problems surface the validate() error codes.
Hypergraph parse_hypergraph(const std::string& text);

/// Canonical text form; parse(serialize(h)) == h.
std::string serialize_hypergraph(const Hypergraph& h);

/// Raw {"k","n","edges"} object as a string.
std::string serialize_hypergraph_json(const Hypergraph& h);

/// Fixed 12-decimal rendering used for every numeric text/csv field.
std::string format_number(double value);

std::string emit_entropy(const Hypergraph& h, double t, Format format);
std::string emit_classify(const Hypergraph& h, Format format);
std::string emit_bounds(StructureTag cls, int k, int m, Format format);
std::string emit_verify(const VerifyResult& result, Format format);
std::string emit_hypergraph(const Hypergraph& h, const char* command, Format format);
std::string emit_transform(const Hypergraph& before, const Hypergraph& after,
                           Format format);

struct EnumerateOutput {
    ClassParams params;
    long long count = 0;
    bool count_only = false;
    bool dedup = false;
    std::vector<Extremizer> classes;  // iso classes when dedup is on
    std::vector<Hypergraph> instances; // full stream otherwise
};

std::string emit_enumerate(const EnumerateOutput& out, Format format);

/// One-line machine-readable error (json mode) or plain message.
std::string emit_error(const Error& error, Format format);

} // namespace hyperent

#endif
