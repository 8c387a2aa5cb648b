#include "hyperent/io.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdio>
#include <set>
#include <sstream>

#include <json.hpp>

namespace hyperent {

using ordered_json = nlohmann::ordered_json;

Format format_from_string(const std::string& name) {
    if (name == "text") return Format::Text;
    if (name == "json") return Format::Json;
    if (name == "csv") return Format::Csv;
    throw Error(ErrorCode::InvalidParameters,
                "unknown format '" + name + "' (expected text, json or csv)");
}

std::string format_number(double value) {
    char buffer[64];
    std::snprintf(buffer, sizeof(buffer), "%.12f", value);
    return buffer;
}

namespace {

Hypergraph parse_json_form(const std::string& text) {
    ordered_json doc;
    try {
        doc = ordered_json::parse(text);
    } catch (const ordered_json::parse_error& e) {
        throw Error(ErrorCode::SyntaxError, e.what());
    }
    if (doc.contains("hypergraph"))
        doc = doc["hypergraph"];
    if (!doc.is_object() || !doc.contains("k") || !doc.contains("n") ||
        !doc.contains("edges"))
        throw Error(ErrorCode::SyntaxError,
                    "expected an object with \"k\", \"n\" and \"edges\"");
    try {
        int k = doc["k"].get<int>();
        int n = doc["n"].get<int>();
        std::vector<Edge> edges;
        for (const auto& item : doc["edges"])
            edges.push_back(item.get<Edge>());
        if (doc.contains("m") &&
            doc["m"].get<long long>() != static_cast<long long>(edges.size()))
            throw Error(ErrorCode::SyntaxError,
                        "\"m\" disagrees with the number of edges");
        return Hypergraph::validate(k, n, std::move(edges));
    } catch (const ordered_json::exception& e) {
        throw Error(ErrorCode::SyntaxError, e.what());
    }
}

std::vector<long long> parse_int_line(const std::string& line, int line_number) {
    std::vector<long long> values;
    size_t pos = 0;
    while (pos < line.size()) {
        while (pos < line.size() && std::isspace(static_cast<unsigned char>(line[pos])))
            ++pos;
        if (pos >= line.size())
            break;
        size_t start = pos;
        while (pos < line.size() && !std::isspace(static_cast<unsigned char>(line[pos])))
            ++pos;
        std::string token = line.substr(start, pos - start);
        try {
            size_t used = 0;
            long long v = std::stoll(token, &used);
            if (used != token.size())
                throw std::invalid_argument(token);
            values.push_back(v);
        } catch (const std::exception&) {
            throw Error(ErrorCode::SyntaxError,
                        "line " + std::to_string(line_number) + ", column " +
                            std::to_string(start + 1) + ": '" + token +
                            "' is not an integer");
        }
    }
    return values;
}

} // namespace

Hypergraph parse_hypergraph(const std::string& text) {
    size_t first = text.find_first_not_of(" \t\r\n");
    if (first == std::string::npos)
        throw Error(ErrorCode::SyntaxError, "empty input");
    if (text[first] == '{')
        return parse_json_form(text);

    std::istringstream in(text);
    std::string line;
    int line_number = 0;
    int k = -1, n = -1;
    long long m = -1;
    std::vector<Edge> edges;
    std::set<Edge> seen;
    while (std::getline(in, line)) {
        ++line_number;
        std::vector<long long> values = parse_int_line(line, line_number);
        if (values.empty())
            continue; // blank line
        if (k < 0) {
            if (values.size() != 3)
                throw Error(ErrorCode::SyntaxError,
                            "line " + std::to_string(line_number) +
                                ": expected header 'k n m'");
            k = static_cast<int>(values[0]);
            n = static_cast<int>(values[1]);
            m = values[2];
            if (k < 2 || n < 0 || m < 0)
                throw Error(ErrorCode::SyntaxError,
                            "line " + std::to_string(line_number) +
                                ": header values out of range");
            continue;
        }
        if (static_cast<long long>(edges.size()) == m)
            throw Error(ErrorCode::SyntaxError,
                        "line " + std::to_string(line_number) + ": expected only " +
                            std::to_string(m) + " edge lines");
        if (static_cast<int>(values.size()) != k)
            throw Error(ErrorCode::SyntaxError,
                        "line " + std::to_string(line_number) + ": expected " +
                            std::to_string(k) + " vertex indices, found " +
                            std::to_string(values.size()));
        Edge e;
        for (long long v : values) {
            if (v < 0 || v >= n)
                throw Error(ErrorCode::VertexOutOfRange,
                            "line " + std::to_string(line_number) + ": vertex " +
                                std::to_string(v) + " outside 0.." +
                                std::to_string(n - 1));
            e.push_back(static_cast<int>(v));
        }
        Edge sorted = e;
        std::sort(sorted.begin(), sorted.end());
        if (std::unique(sorted.begin(), sorted.end()) != sorted.end())
            throw Error(ErrorCode::NonUniformEdge,
                        "line " + std::to_string(line_number) +
                            ": repeated vertex inside the edge");
        if (!seen.insert(sorted).second)
            throw Error(ErrorCode::DuplicateEdge,
                        "line " + std::to_string(line_number) +
                            ": edge duplicates an earlier edge");
        edges.push_back(std::move(e));
    }
    if (k < 0)
        throw Error(ErrorCode::SyntaxError, "missing header 'k n m'");
    if (static_cast<long long>(edges.size()) != m)
        throw Error(ErrorCode::SyntaxError,
                    "expected " + std::to_string(m) + " edge lines, found " +
                        std::to_string(edges.size()));
    return Hypergraph::validate(k, n, std::move(edges));
}

std::string serialize_hypergraph(const Hypergraph& h) {
    std::string out = std::to_string(h.k()) + " " + std::to_string(h.vertex_count()) +
                      " " + std::to_string(h.edge_count()) + "\n";
    for (const Edge& e : h.edges()) {
        for (size_t i = 0; i < e.size(); ++i)
            out += (i ? " " : "") + std::to_string(e[i]);
        out += "\n";
    }
    return out;
}

namespace {

ordered_json hypergraph_json(const Hypergraph& h) {
    ordered_json doc;
    doc["k"] = h.k();
    doc["n"] = h.vertex_count();
    doc["edges"] = h.edges();
    return doc;
}

ordered_json wrap(const char* command) {
    ordered_json doc;
    doc["schema_version"] = "1";
    doc["command"] = command;
    return doc;
}

std::string csv_escape(const std::string& field) {
    if (field.find_first_of(",\"\n") == std::string::npos)
        return field;
    std::string out = "\"";
    for (char c : field) {
        if (c == '"')
            out += '"';
        out += c;
    }
    return out + "\"";
}

std::string tag_union(const std::vector<Extremizer>& extremizers) {
    std::vector<FamilyTag> tags;
    for (const Extremizer& e : extremizers)
        for (FamilyTag t : e.tags)
            if (std::find(tags.begin(), tags.end(), t) == tags.end())
                tags.push_back(t);
    std::sort(tags.begin(), tags.end());
    if (tags.empty())
        return "-";
    std::string out;
    for (size_t i = 0; i < tags.size(); ++i)
        out += std::string(i ? "+" : "") + to_string(tags[i]);
    return out;
}

std::vector<std::string> tag_names(const std::vector<FamilyTag>& tags) {
    std::vector<std::string> names;
    for (FamilyTag t : tags)
        names.emplace_back(to_string(t));
    return names;
}

const char* verdict_token(const VerifyResult& result) {
    if (!result.pass)
        return "fail";
    return result.report.empty_class ? "pass-empty" : "pass";
}

ordered_json extremizer_json(const Extremizer& e) {
    ordered_json doc;
    doc["hypergraph"] = hypergraph_json(e.instance);
    doc["tags"] = tag_names(e.tags);
    doc["degrees"] = e.degrees;
    doc["h"] = e.h;
    doc["labeled_count"] = e.labeled_count;
    return doc;
}

} // namespace

std::string serialize_hypergraph_json(const Hypergraph& h) {
    return hypergraph_json(h).dump();
}

std::string emit_entropy(const Hypergraph& h, double t, Format format) {
    const double entropy = degree_entropy(h, t);
    const double h_val = h_value(h);
    switch (format) {
    case Format::Text: {
        std::string out;
        out += "k " + std::to_string(h.k()) + "\n";
        out += "n " + std::to_string(h.vertex_count()) + "\n";
        out += "m " + std::to_string(h.edge_count()) + "\n";
        out += "t " + format_number(t) + "\n";
        out += "entropy " + format_number(entropy) + "\n";
        out += "h " + format_number(h_val) + "\n";
        return out;
    }
    case Format::Json: {
        ordered_json doc = wrap("entropy");
        doc["k"] = h.k();
        doc["n"] = h.vertex_count();
        doc["m"] = h.edge_count();
        doc["t"] = t;
        doc["entropy"] = entropy;
        doc["h"] = h_val;
        return doc.dump() + "\n";
    }
    case Format::Csv:
        return "k,n,m,t,entropy,h\n" + std::to_string(h.k()) + "," +
               std::to_string(h.vertex_count()) + "," + std::to_string(h.edge_count()) +
               "," + format_number(t) + "," + format_number(entropy) + "," +
               format_number(h_val) + "\n";
    }
    return {};
}

std::string emit_classify(const Hypergraph& h, Format format) {
    StructureClass sc = classify(h);
    switch (format) {
    case Format::Text: {
        std::string out;
        out += std::string("connected ") + (sc.connected ? "true" : "false") + "\n";
        out += "components " + std::to_string(sc.components) + "\n";
        out += "cyclomatic " + std::to_string(sc.cyclomatic) + "\n";
        out += std::string("tag ") + to_string(sc.tag) + "\n";
        out += std::string("linear ") + (sc.linear ? "true" : "false") + "\n";
        return out;
    }
    case Format::Json: {
        ordered_json doc = wrap("classify");
        doc["connected"] = sc.connected;
        doc["components"] = sc.components;
        doc["cyclomatic"] = sc.cyclomatic;
        doc["tag"] = to_string(sc.tag);
        doc["linear"] = sc.linear;
        return doc.dump() + "\n";
    }
    case Format::Csv:
        return "connected,components,cyclomatic,tag,linear\n" +
               std::string(sc.connected ? "true" : "false") + "," +
               std::to_string(sc.components) + "," + std::to_string(sc.cyclomatic) +
               "," + to_string(sc.tag) + "," + (sc.linear ? "true" : "false") + "\n";
    }
    return {};
}

std::string emit_bounds(StructureTag cls, int k, int m, Format format) {
    BoundPair entropy = theorem_bounds(cls, k, m);
    BoundPair h = h_bounds(cls, k, m);
    auto witness = [](const std::vector<FamilyTag>& tags) {
        std::string out;
        for (size_t i = 0; i < tags.size(); ++i)
            out += std::string(i ? "+" : "") + to_string(tags[i]);
        return out;
    };
    switch (format) {
    case Format::Text: {
        std::string out;
        out += std::string("class ") + to_string(cls) + "\n";
        out += "k " + std::to_string(k) + "\n";
        out += "m " + std::to_string(m) + "\n";
        out += "lower " + format_number(entropy.lower) + "\n";
        out += "upper " + format_number(entropy.upper) + "\n";
        out += "lower_witness " + witness(entropy.lower_witness) + "\n";
        out += "upper_witness " + witness(entropy.upper_witness) + "\n";
        out += "h_lower " + format_number(h.lower) + "\n";
        out += "h_upper " + format_number(h.upper) + "\n";
        return out;
    }
    case Format::Json: {
        ordered_json doc = wrap("bounds");
        doc["class"] = to_string(cls);
        doc["k"] = k;
        doc["m"] = m;
        doc["lower"] = entropy.lower;
        doc["upper"] = entropy.upper;
        doc["lower_witness"] = tag_names(entropy.lower_witness);
        doc["upper_witness"] = tag_names(entropy.upper_witness);
        doc["h_lower"] = h.lower;
        doc["h_upper"] = h.upper;
        return doc.dump() + "\n";
    }
    case Format::Csv:
        return "class,k,m,lower,upper,lower_witness,upper_witness,h_lower,h_upper\n" +
               std::string(to_string(cls)) + "," + std::to_string(k) + "," +
               std::to_string(m) + "," + format_number(entropy.lower) + "," +
               format_number(entropy.upper) + "," + witness(entropy.lower_witness) +
               "," + witness(entropy.upper_witness) + "," + format_number(h.lower) +
               "," + format_number(h.upper) + "\n";
    }
    return {};
}

std::string emit_verify(const VerifyResult& result, Format format) {
    const ExtremalReport& r = result.report;
    const std::string min_tags = tag_union(r.entropy_minimizers);
    const std::string max_tags = tag_union(r.entropy_maximizers);
    switch (format) {
    case Format::Text: {
        std::string out;
        out += std::string("theorem ") + to_string(result.theorem) + "\n";
        out += std::string("class ") + to_string(r.params.tag()) + "\n";
        out += "k " + std::to_string(r.params.k) + "\n";
        out += "m " + std::to_string(r.params.m) + "\n";
        out += "n " + std::to_string(r.params.vertex_count()) + "\n";
        out += "labeled_count " + std::to_string(r.labeled_count) + "\n";
        if (r.iso_class_count)
            out += "iso_class_count " + std::to_string(*r.iso_class_count) + "\n";
        out += "min_I " + format_number(r.min_entropy) + "\n";
        out += "max_I " + format_number(r.max_entropy) + "\n";
        out += "min_h " + format_number(r.min_h) + "\n";
        out += "max_h " + format_number(r.max_h) + "\n";
        out += "bound_lower " + format_number(r.entropy_bounds.lower) + "\n";
        out += "bound_upper " + format_number(r.entropy_bounds.upper) + "\n";
        out += "lower_attain_count " + std::to_string(r.lower_attain_count) + "\n";
        out += "upper_attain_count " + std::to_string(r.upper_attain_count) + "\n";
        out += "Imin_tags " + min_tags + "\n";
        out += "Imax_tags " + max_tags + "\n";
        for (const std::string& note : result.notes)
            out += "note " + note + "\n";
        for (const std::string& warning : r.warnings)
            out += "warning " + warning + "\n";
        out += std::string("verdict ") + verdict_token(result) + "\n";
        if (!result.pass && r.counterexample) {
            out += "counterexample " + r.counterexample_reason + "\n";
            out += serialize_hypergraph(*r.counterexample);
        }
        return out;
    }
    case Format::Json: {
        ordered_json doc = wrap("verify");
        doc["theorem"] = to_string(result.theorem);
        doc["class"] = to_string(r.params.tag());
        doc["k"] = r.params.k;
        doc["m"] = r.params.m;
        doc["n"] = r.params.vertex_count();
        doc["labeled_count"] = r.labeled_count;
        if (r.iso_class_count)
            doc["iso_class_count"] = *r.iso_class_count;
        else
            doc["iso_class_count"] = nullptr;
        doc["empty_class"] = r.empty_class;
        doc["min_I"] = r.min_entropy;
        doc["max_I"] = r.max_entropy;
        doc["min_h"] = r.min_h;
        doc["max_h"] = r.max_h;
        doc["bounds"] = {{"lower", r.entropy_bounds.lower},
                         {"upper", r.entropy_bounds.upper},
                         {"lower_witness", tag_names(r.entropy_bounds.lower_witness)},
                         {"upper_witness", tag_names(r.entropy_bounds.upper_witness)}};
        doc["h_bounds"] = {{"lower", r.h_value_bounds.lower},
                           {"upper", r.h_value_bounds.upper}};
        doc["lower_attain_count"] = r.lower_attain_count;
        doc["upper_attain_count"] = r.upper_attain_count;
        doc["entropy_minimizers"] = ordered_json::array();
        for (const Extremizer& e : r.entropy_minimizers)
            doc["entropy_minimizers"].push_back(extremizer_json(e));
        doc["entropy_maximizers"] = ordered_json::array();
        for (const Extremizer& e : r.entropy_maximizers)
            doc["entropy_maximizers"].push_back(extremizer_json(e));
        doc["notes"] = result.notes;
        doc["warnings"] = r.warnings;
        doc["verdict"] = verdict_token(result);
        if (!result.pass && r.counterexample) {
            doc["counterexample"] = hypergraph_json(*r.counterexample);
            doc["counterexample_reason"] = r.counterexample_reason;
        }
        return doc.dump() + "\n";
    }
    case Format::Csv: {
        std::string out =
            "class,k,m,n,labeled_count,min_I,max_I,min_h,max_h,bound_lower,"
            "bound_upper,verdict,extremizer_tags\n";
        out += std::string(to_string(r.params.tag())) + "," +
               std::to_string(r.params.k) + "," + std::to_string(r.params.m) + "," +
               std::to_string(r.params.vertex_count()) + "," +
               std::to_string(r.labeled_count) + "," + format_number(r.min_entropy) +
               "," + format_number(r.max_entropy) + "," + format_number(r.min_h) + "," +
               format_number(r.max_h) + "," + format_number(r.entropy_bounds.lower) +
               "," + format_number(r.entropy_bounds.upper) + "," +
               verdict_token(result) + "," +
               csv_escape("Imin:" + min_tags + "|Imax:" + max_tags) + "\n";
        return out;
    }
    }
    return {};
}

std::string emit_hypergraph(const Hypergraph& h, const char* command, Format format) {
    switch (format) {
    case Format::Text:
        return serialize_hypergraph(h);
    case Format::Json: {
        ordered_json doc = wrap(command);
        doc["hypergraph"] = hypergraph_json(h);
        return doc.dump() + "\n";
    }
    case Format::Csv: {
        std::string edges;
        for (int i = 0; i < h.edge_count(); ++i) {
            if (i)
                edges += ";";
            const Edge& e = h.edge(i);
            for (size_t j = 0; j < e.size(); ++j)
                edges += (j ? " " : "") + std::to_string(e[j]);
        }
        return "k,n,m,edges\n" + std::to_string(h.k()) + "," +
               std::to_string(h.vertex_count()) + "," + std::to_string(h.edge_count()) +
               "," + csv_escape(edges) + "\n";
    }
    }
    return {};
}

std::string emit_transform(const Hypergraph& before, const Hypergraph& after,
                           Format format) {
    switch (format) {
    case Format::Text:
        return serialize_hypergraph(after);
    case Format::Json: {
        ordered_json doc = wrap("transform");
        doc["h_before"] = h_value(before);
        doc["h_after"] = h_value(after);
        doc["hypergraph"] = hypergraph_json(after);
        return doc.dump() + "\n";
    }
    case Format::Csv:
        return emit_hypergraph(after, "transform", Format::Csv);
    }
    return {};
}

std::string emit_enumerate(const EnumerateOutput& out, Format format) {
    switch (format) {
    case Format::Text: {
        if (out.count_only)
            return "count " + std::to_string(out.count) + "\n";
        std::string text;
        bool first = true;
        auto append = [&](const Hypergraph& h) {
            if (!first)
                text += "\n";
            first = false;
            text += serialize_hypergraph(h);
        };
        if (out.dedup)
            for (const Extremizer& e : out.classes)
                append(e.instance);
        else
            for (const Hypergraph& h : out.instances)
                append(h);
        return text;
    }
    case Format::Json: {
        ordered_json doc = wrap("enumerate");
        doc["class"] = to_string(out.params.tag());
        doc["k"] = out.params.k;
        doc["m"] = out.params.m;
        doc["n"] = out.params.vertex_count();
        doc["count"] = out.count;
        if (!out.count_only) {
            doc["instances"] = ordered_json::array();
            if (out.dedup) {
                for (const Extremizer& e : out.classes) {
                    ordered_json item = hypergraph_json(e.instance);
                    item["labeled_count"] = e.labeled_count;
                    doc["instances"].push_back(item);
                }
            } else {
                for (const Hypergraph& h : out.instances)
                    doc["instances"].push_back(hypergraph_json(h));
            }
        }
        return doc.dump() + "\n";
    }
    case Format::Csv:
        return "class,k,m,n,labeled_count\n" + std::string(to_string(out.params.tag())) +
               "," + std::to_string(out.params.k) + "," + std::to_string(out.params.m) +
               "," + std::to_string(out.params.vertex_count()) + "," +
               std::to_string(out.count) + "\n";
    }
    return {};
}

std::string emit_error(const Error& error, Format format) {
    if (format == Format::Json) {
        ordered_json doc;
        doc["schema_version"] = "1";
        doc["error"] = {{"code", to_string(error.code())}, {"message", error.what()}};
        return doc.dump() + "\n";
    }
    return std::string("error: ") + error.what() + "\n";
}

} // namespace hyperent
