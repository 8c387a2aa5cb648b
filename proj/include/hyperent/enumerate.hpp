#ifndef HYPERENT_ENUMERATE_HPP
#define HYPERENT_ENUMERATE_HPP

#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "hyperent/entropy.hpp"
#include "hyperent/families.hpp"
#include "hyperent/hypergraph.hpp"

namespace hyperent {

/// A labeled enumeration class: all connected simple k-uniform hypergraphs
/// with m edges and the given cyclomatic number, on n = m(k-1)+1-c vertices.
struct ClassParams {
    int k = 3;
    int m = 2;
    int cyclomatic = 0;

    int vertex_count() const { return m * (k - 1) + 1 - cyclomatic; }
    StructureTag tag() const;
};

ClassParams class_params(StructureTag cls, int k, int m);

struct ScanOptions {
    int jobs = 1;
    double max_space = 1e8; // cap on C(C(n,k), m); overridable
    bool pruned = true;     // false = naive filter-all-subsets path
    int iso_limit = 14;     // max n for isomorphism-based dedup/counting
};

/// C(C(n,k), m), saturating; the guarded search-space estimate.
double search_space_size(const ClassParams& p);

/// Streams every labeled instance in deterministic lexicographic order
/// (single-threaded). Throws SearchSpaceTooLarge past the max_space cap.
void for_each_instance(const ClassParams& p, const ScanOptions& opts,
                       const std::function<void(const Hypergraph&)>& visit);

std::vector<Hypergraph> enumerate_class(const ClassParams& p, const ScanOptions& opts = {});

long long count_instances(const ClassParams& p, const ScanOptions& opts = {});

/// Order-sensitive digest of the canonical stream; lets the pruned and the
/// naive generation path be compared instance-for-instance.
struct StreamDigest {
    long long count = 0;
    std::uint64_t hash = 1469598103934665603ULL; // FNV-1a offset basis
    bool operator==(const StreamDigest&) const = default;
};

StreamDigest digest_class(const ClassParams& p, const ScanOptions& opts = {});

/// One isomorphism class of extremal instances.
struct Extremizer {
    Hypergraph instance;         // first representative in stream order
    std::vector<FamilyTag> tags; // every family predicate that holds
    std::vector<int> degrees;    // non-increasing degree multiset
    double h = 0.0;
    long long labeled_count = 0; // labeled instances grouped under this rep
};

struct ExtremalReport {
    ClassParams params;
    long long labeled_count = 0;
    std::optional<long long> iso_class_count; // present when n <= iso_limit
    bool empty_class = true;

    // Extremal values of the t=1 entropy and of h over the class; the two
    // are duals: min_I = log2(km) - max_h/(km).
    double min_entropy = 0.0, max_entropy = 0.0;
    double min_h = 0.0, max_h = 0.0;

    std::vector<Extremizer> entropy_minimizers; // = h maximizers
    std::vector<Extremizer> entropy_maximizers; // = h minimizers

    BoundPair entropy_bounds;
    BoundPair h_value_bounds;

    // Scan verdicts.
    bool bounds_ok = true;         // every instance inside the closed-form bounds
    bool lower_equality_ok = true; // attains entropy lower bound <=> witness family
    bool upper_equality_ok = true;
    bool identity_ok = true;       // direct entropy vs log2(km)-h/(km), 1e-12
    long long lower_attain_count = 0;
    long long upper_attain_count = 0;

    std::vector<std::string> warnings;
    std::optional<Hypergraph> counterexample;
    std::string counterexample_reason;

    bool pass() const;
};

ExtremalReport extremal_report(const ClassParams& p, const ScanOptions& opts = {});

/// The three verification suites, named by their CLI tokens
/// T3.1 (supertree), T4.1 (unicyclic), T5.1 (bicyclic).
enum class TheoremId { SupertreeBounds, UnicyclicBounds, BicyclicBounds };

const char* to_string(TheoremId id);
TheoremId theorem_from_string(const std::string& token);
StructureTag theorem_class(TheoremId id);

struct VerifyResult {
    TheoremId theorem = TheoremId::SupertreeBounds;
    ExtremalReport report;
    bool pass = false;
    std::vector<std::string> notes; // empty-class and feasibility remarks
};

VerifyResult verify_theorem(TheoremId id, int k, int m, const ScanOptions& opts = {});

/// Deterministic PRNG: raw std::mt19937_64 outputs (whose sequence the
/// standard pins down exactly) with a local rejection-sampling range
/// reduction, so streams are identical across standard libraries.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}
    std::uint64_t next() { return engine_(); }
    int below(int bound); // uniform in [0, bound)

private:
    std::mt19937_64 engine_;
};

/// Deterministic-in-seed random member of the class: a random supertree
/// grown edge by edge, then `c` fusions of a degree-1 vertex into another
/// edge's vertex. Throws RetryExhausted when fusions dead-end repeatedly
/// and InvalidParameters for infeasible classes.
Hypergraph random_instance(StructureTag cls, int k, int m, std::uint64_t seed);
Hypergraph random_instance(StructureTag cls, int k, int m, Rng& rng);

/// Random connected simple graph: a random attachment tree plus
/// `extra_edges` distinct non-tree edges.
Graph random_connected_graph(int n, int extra_edges, Rng& rng);

} // namespace hyperent

#endif
