#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "hyperent/enumerate.hpp"
#include "hyperent/io.hpp"
#include "hyperent/transforms.hpp"

namespace {

using namespace hyperent;

std::string slurp(const std::string& path) {
    if (path == "-") {
        std::ostringstream buffer;
        buffer << std::cin.rdbuf();
        return buffer.str();
    }
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw Error(ErrorCode::InvalidParameters, "cannot open file '" + path + "'");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

Hypergraph load(const std::string& path) {
    return parse_hypergraph(slurp(path));
}

struct GenerateRequest {
    std::string family;
    int k = 3;
    int m = 2;
    std::uint64_t seed = 0;
};

Hypergraph run_generate(const GenerateRequest& req) {
    if (req.family == "random-supertree")
        return random_instance(StructureTag::Supertree, req.k, req.m, req.seed);
    if (req.family == "random-unicyclic")
        return random_instance(StructureTag::Unicyclic, req.k, req.m, req.seed);
    if (req.family == "random-bicyclic")
        return random_instance(StructureTag::Bicyclic, req.k, req.m, req.seed);
    return family_member(family_tag_from_string(req.family), req.m, req.k);
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"degree-based entropy toolkit for k-uniform hypergraphs"};
    app.require_subcommand(1);

    std::string format_name = "text";
    std::uint64_t seed = 0;
    app.add_option("--format", format_name, "output format: text, json or csv")
        ->check(CLI::IsMember({"text", "json", "csv"}));
    app.add_option("--seed", seed, "seed for the random generators");

    std::string in_path;
    double t_value = 1.0;
    auto* cmd_entropy = app.add_subcommand("entropy", "degree entropy of one instance");
    cmd_entropy->fallthrough();
    cmd_entropy->add_option("--in", in_path, "hypergraph file ('-' for stdin)")
        ->required();
    cmd_entropy->add_option("--t", t_value, "entropy exponent (default 1)");

    auto* cmd_classify = app.add_subcommand("classify", "structural classification");
    cmd_classify->fallthrough();
    cmd_classify->add_option("--in", in_path, "hypergraph file ('-' for stdin)")
        ->required();

    std::string class_name;
    int k = 3, m = 2;
    auto* cmd_bounds = app.add_subcommand("bounds", "closed-form entropy bounds");
    cmd_bounds->fallthrough();
    cmd_bounds->add_option("--class", class_name, "supertree, unicyclic or bicyclic")
        ->required();
    cmd_bounds->add_option("--k", k, "edge cardinality")->required();
    cmd_bounds->add_option("--m", m, "edge count")->required();

    std::string theorem_token;
    int jobs = 1;
    double max_space = 1e8;
    auto* cmd_verify =
        app.add_subcommand("verify", "exhaustively verify a bound theorem");
    cmd_verify->fallthrough();
    cmd_verify->add_option("--theorem", theorem_token, "T3.1, T4.1 or T5.1")->required();
    cmd_verify->add_option("--k", k, "edge cardinality")->required();
    cmd_verify->add_option("--m", m, "edge count")->required();
    cmd_verify->add_option("--jobs", jobs, "parallel scan shards (default 1)");
    cmd_verify->add_option("--max-space", max_space,
                           "search-space cap on C(C(n,k), m) (default 1e8)");

    bool count_only = false, dedup_iso = false;
    auto* cmd_enumerate =
        app.add_subcommand("enumerate", "stream every labeled instance of a class");
    cmd_enumerate->fallthrough();
    cmd_enumerate->add_option("--class", class_name, "supertree, unicyclic or bicyclic")
        ->required();
    cmd_enumerate->add_option("--k", k, "edge cardinality")->required();
    cmd_enumerate->add_option("--m", m, "edge count")->required();
    cmd_enumerate->add_flag("--count-only", count_only, "print only the labeled count");
    cmd_enumerate->add_flag("--dedup-iso", dedup_iso,
                            "collapse isomorphic instances (small n only)");
    cmd_enumerate->add_option("--jobs", jobs, "parallel shards for --count-only");
    cmd_enumerate->add_option("--max-space", max_space, "search-space cap");

    std::string family;
    auto* cmd_generate = app.add_subcommand("generate", "construct a named family member");
    cmd_generate->fallthrough();
    cmd_generate
        ->add_option("--family", family,
                     "hyperstar, loose-path, HI, HII, HIII, HIV, HV, "
                     "random-supertree, random-unicyclic or random-bicyclic")
        ->required();
    cmd_generate->add_option("--k", k, "edge cardinality")->required();
    cmd_generate->add_option("--m", m, "edge count")->required();

    auto* cmd_transform = app.add_subcommand("transform", "edge moving and releasing");
    cmd_transform->fallthrough();
    cmd_transform->require_subcommand(1);
    std::vector<int> move_edges_opt, move_from, move_to;
    auto* cmd_move = cmd_transform->add_subcommand("move", "move edges between vertices");
    cmd_move->fallthrough();
    cmd_move->add_option("--in", in_path, "hypergraph file ('-' for stdin)")->required();
    cmd_move->add_option("--edge", move_edges_opt, "edge index (repeatable)")->required();
    cmd_move->add_option("--from", move_from, "source vertex (repeatable)")->required();
    cmd_move->add_option("--to", move_to, "target vertex (repeatable)")->required();
    int release_edge = 0, release_anchor = 0;
    auto* cmd_release =
        cmd_transform->add_subcommand("release", "edge-releasing at an anchor");
    cmd_release->fallthrough();
    cmd_release->add_option("--in", in_path, "hypergraph file ('-' for stdin)")
        ->required();
    cmd_release->add_option("--edge", release_edge, "non-pendent edge index")->required();
    cmd_release->add_option("--anchor", release_anchor, "anchor vertex inside the edge")
        ->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_name() == "CallForHelp" || e.get_name() == "CallForAllHelp")
            return app.exit(e);
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }

    Format format = format_from_string(format_name);

    try {
        if (cmd_entropy->parsed()) {
            std::cout << emit_entropy(load(in_path), t_value, format);
            return 0;
        }
        if (cmd_classify->parsed()) {
            std::cout << emit_classify(load(in_path), format);
            return 0;
        }
        if (cmd_bounds->parsed()) {
            std::cout << emit_bounds(structure_tag_from_string(class_name), k, m, format);
            return 0;
        }
        if (cmd_verify->parsed()) {
            ScanOptions opts;
            opts.jobs = jobs;
            opts.max_space = max_space;
            VerifyResult result = verify_theorem(theorem_from_string(theorem_token), k, m, opts);
            std::cout << emit_verify(result, format);
            return result.pass ? 0 : 1;
        }
        if (cmd_enumerate->parsed()) {
            ScanOptions opts;
            opts.jobs = jobs;
            opts.max_space = max_space;
            EnumerateOutput out;
            out.params = class_params(structure_tag_from_string(class_name), k, m);
            out.count_only = count_only;
            out.dedup = dedup_iso;
            if (count_only) {
                out.count = count_instances(out.params, opts);
            } else if (dedup_iso) {
                for_each_instance(out.params, opts, [&](const Hypergraph& h) {
                    ++out.count;
                    for (Extremizer& cls : out.classes) {
                        if (is_isomorphic(cls.instance, h)) {
                            ++cls.labeled_count;
                            return;
                        }
                    }
                    out.classes.push_back(Extremizer{h, family_tags(h),
                                                     degree_sequence(h).values,
                                                     h_value(h), 1});
                });
            } else {
                out.instances = enumerate_class(out.params, opts);
                out.count = static_cast<long long>(out.instances.size());
            }
            std::cout << emit_enumerate(out, format);
            return 0;
        }
        if (cmd_generate->parsed()) {
            GenerateRequest req{family, k, m, seed};
            std::cout << emit_hypergraph(run_generate(req), "generate", format);
            return 0;
        }
        if (cmd_move->parsed()) {
            if (move_edges_opt.size() != move_from.size() ||
                move_from.size() != move_to.size())
                throw Error(ErrorCode::InvalidParameters,
                            "--edge, --from and --to must be given the same number of times");
            Hypergraph before = load(in_path);
            MoveSpec spec;
            for (size_t i = 0; i < move_edges_opt.size(); ++i)
                spec.moves.push_back({move_edges_opt[i], move_from[i], move_to[i]});
            Hypergraph after = move_edges(before, spec);
            std::cout << emit_transform(before, after, format);
            return 0;
        }
        if (cmd_release->parsed()) {
            Hypergraph before = load(in_path);
            Hypergraph after = edge_release(before, release_edge, release_anchor);
            std::cout << emit_transform(before, after, format);
            return 0;
        }
    } catch (const Error& e) {
        std::cerr << emit_error(e, format);
        return 2;
    }
    return 2;
}
