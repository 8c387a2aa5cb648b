#include "hyperent/enumerate.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstring>
#include <map>
#include <thread>

namespace hyperent {

StructureTag ClassParams::tag() const {
    switch (cyclomatic) {
    case 0: return StructureTag::Supertree;
    case 1: return StructureTag::Unicyclic;
    case 2: return StructureTag::Bicyclic;
    default: return StructureTag::Other;
    }
}

ClassParams class_params(StructureTag cls, int k, int m) {
    int c = 0;
    switch (cls) {
    case StructureTag::Supertree: c = 0; break;
    case StructureTag::Unicyclic: c = 1; break;
    case StructureTag::Bicyclic: c = 2; break;
    case StructureTag::Other:
        throw Error(ErrorCode::InvalidParameters, "no enumeration class for tag 'other'");
    }
    return ClassParams{k, m, c};
}

const char* to_string(TheoremId id) {
    switch (id) {
    case TheoremId::SupertreeBounds: return "T3.1";
    case TheoremId::UnicyclicBounds: return "T4.1";
    case TheoremId::BicyclicBounds: return "T5.1";
    }
    return "T3.1";
}

TheoremId theorem_from_string(const std::string& token) {
    if (token == "T3.1") return TheoremId::SupertreeBounds;
    if (token == "T4.1") return TheoremId::UnicyclicBounds;
    if (token == "T5.1") return TheoremId::BicyclicBounds;
    throw Error(ErrorCode::InvalidParameters,
                "unknown theorem '" + token + "' (expected T3.1, T4.1 or T5.1)");
}

StructureTag theorem_class(TheoremId id) {
    switch (id) {
    case TheoremId::SupertreeBounds: return StructureTag::Supertree;
    case TheoremId::UnicyclicBounds: return StructureTag::Unicyclic;
    case TheoremId::BicyclicBounds: return StructureTag::Bicyclic;
    }
    return StructureTag::Supertree;
}

namespace {

constexpr double kTol = 1e-12;
constexpr double kTieWindow = 1e-9;

double binomial_capped(long long n, long long r, double cap) {
    if (r < 0 || r > n)
        return 0.0;
    r = std::min(r, n - r);
    double result = 1.0;
    for (long long i = 1; i <= r; ++i) {
        result *= static_cast<double>(n - r + i);
        result /= static_cast<double>(i);
        if (result > cap)
            return cap;
    }
    return result;
}

struct Candidates {
    int n = 0, k = 0;
    std::vector<std::uint64_t> masks;     // lexicographic k-subset order
    std::vector<std::vector<int>> verts;
    int with_vertex0 = 0; // candidates containing vertex 0 form a prefix
};

Candidates build_candidates(int n, int k) {
    Candidates c;
    c.n = n;
    c.k = k;
    if (n < k || n <= 0)
        return c;
    std::vector<int> pick(static_cast<size_t>(k));
    for (int i = 0; i < k; ++i)
        pick[static_cast<size_t>(i)] = i;
    while (true) {
        std::uint64_t mask = 0;
        for (int v : pick)
            mask |= std::uint64_t(1) << v;
        c.masks.push_back(mask);
        c.verts.push_back(pick);
        int i = k - 1;
        while (i >= 0 && pick[static_cast<size_t>(i)] == n - k + i)
            --i;
        if (i < 0)
            break;
        ++pick[static_cast<size_t>(i)];
        for (int j = i + 1; j < k; ++j)
            pick[static_cast<size_t>(j)] = pick[static_cast<size_t>(j - 1)] + 1;
    }
    for (size_t i = 0; i < c.masks.size(); ++i)
        if (c.masks[i] & 1)
            c.with_vertex0 = static_cast<int>(i) + 1;
    return c;
}

struct ScanInstance {
    const Candidates* cand = nullptr;
    const int* chosen = nullptr;
    int m = 0;
    const int* degrees = nullptr; // by vertex label, all >= 1
    double h = 0.0;
    int max_degree = 0;
};

Hypergraph materialize(const ScanInstance& inst) {
    std::vector<Edge> edges;
    edges.reserve(static_cast<size_t>(inst.m));
    for (int i = 0; i < inst.m; ++i)
        edges.push_back(inst.cand->verts[static_cast<size_t>(inst.chosen[i])]);
    return Hypergraph::validate(inst.cand->k, inst.cand->n, std::move(edges));
}

bool chosen_connected(const Candidates& cand, const int* chosen, int m) {
    std::uint64_t comp = cand.masks[static_cast<size_t>(chosen[0])];
    std::uint64_t absorbed = 1; // bitset over chosen positions
    bool grew = true;
    while (grew) {
        grew = false;
        for (int i = 1; i < m; ++i) {
            if (absorbed & (std::uint64_t(1) << i))
                continue;
            std::uint64_t mask = cand.masks[static_cast<size_t>(chosen[i])];
            if (mask & comp) {
                comp |= mask;
                absorbed |= std::uint64_t(1) << i;
                grew = true;
            }
        }
    }
    return std::popcount(absorbed) == m;
}

// Depth-first combination scan. The shard range [first_lo, first_hi)
// restricts the first chosen candidate index only.
template <typename Leaf>
void scan_range(const Candidates& cand, int m, bool pruned, int first_lo, int first_hi,
                const std::vector<double>& dlogd, Leaf&& leaf) {
    const int total = static_cast<int>(cand.masks.size());
    if (total < m || m <= 0)
        return;
    const std::uint64_t full =
        (cand.n >= 64) ? ~std::uint64_t(0) : ((std::uint64_t(1) << cand.n) - 1);

    std::vector<int> chosen(static_cast<size_t>(m));
    std::vector<int> degrees(static_cast<size_t>(cand.n), 0);

    struct Rec {
        const Candidates& cand;
        int m;
        bool pruned;
        std::uint64_t full;
        const std::vector<double>& dlogd;
        std::vector<int>& chosen;
        std::vector<int>& degrees;
        Leaf& leaf;

        void descend(int depth, int start, int stop, std::uint64_t cover) {
            const int total = static_cast<int>(cand.masks.size());
            const int remaining = m - depth;
            const int limit = std::min(stop, total - remaining + 1);
            for (int idx = start; idx < limit; ++idx) {
                const std::uint64_t mask = cand.masks[static_cast<size_t>(idx)];
                const std::uint64_t next_cover = cover | mask;
                if (pruned) {
                    const int uncovered = cand.n - std::popcount(next_cover);
                    if (uncovered > (remaining - 1) * cand.k)
                        continue;
                }
                chosen[static_cast<size_t>(depth)] = idx;
                for (int v : cand.verts[static_cast<size_t>(idx)])
                    ++degrees[static_cast<size_t>(v)];
                if (depth + 1 == m) {
                    if (next_cover == full &&
                        chosen_connected(cand, chosen.data(), m)) {
                        double h = 0.0;
                        int maxdeg = 0;
                        for (int v = 0; v < cand.n; ++v) {
                            const int d = degrees[static_cast<size_t>(v)];
                            h += dlogd[static_cast<size_t>(d)];
                            maxdeg = std::max(maxdeg, d);
                        }
                        ScanInstance inst{&cand, chosen.data(), m, degrees.data(), h,
                                          maxdeg};
                        leaf(inst);
                    }
                } else {
                    descend(depth + 1, idx + 1, total, next_cover);
                }
                for (int v : cand.verts[static_cast<size_t>(idx)])
                    --degrees[static_cast<size_t>(v)];
            }
        }
    };

    int hi = first_hi;
    if (pruned)
        hi = std::min(hi, cand.with_vertex0); // a valid cover has an edge through 0
    Rec rec{cand, m, pruned, full, dlogd, chosen, degrees, leaf};
    rec.descend(0, first_lo, hi, 0);
}

std::vector<double> dlogd_table(int max_degree) {
    std::vector<double> table(static_cast<size_t>(max_degree) + 1, 0.0);
    for (int d = 2; d <= max_degree; ++d)
        table[static_cast<size_t>(d)] =
            static_cast<double>(d) * std::log2(static_cast<double>(d));
    return table;
}

void check_scan_params(const ClassParams& p, const ScanOptions& opts) {
    if (p.k < 3)
        throw Error(ErrorCode::InvalidParameters, "enumeration requires k >= 3");
    if (p.m < 1)
        throw Error(ErrorCode::InvalidParameters, "enumeration requires m >= 1");
    if (p.cyclomatic < 0 || p.cyclomatic > 2)
        throw Error(ErrorCode::InvalidParameters,
                    "enumeration covers cyclomatic numbers 0, 1 and 2");
    if (p.vertex_count() > 63)
        throw Error(ErrorCode::SearchSpaceTooLarge,
                    "vertex count " + std::to_string(p.vertex_count()) +
                        " exceeds the 63-vertex enumeration limit");
    const double space = search_space_size(p);
    if (space > opts.max_space)
        throw Error(ErrorCode::SearchSpaceTooLarge,
                    "subset space ~" + std::to_string(space) + " exceeds cap " +
                        std::to_string(opts.max_space) +
                        " (override with a larger max-space)");
}

// Contiguous first-index shard boundaries with roughly equal combination
// counts, so a parallel scan partitions the sequential stream.
std::vector<std::pair<int, int>> shard_ranges(int total, int first_limit, int m,
                                              int jobs) {
    std::vector<std::pair<int, int>> ranges;
    if (first_limit <= 0)
        return ranges;
    jobs = std::max(1, jobs);
    std::vector<double> weight(static_cast<size_t>(first_limit));
    for (int c0 = 0; c0 < first_limit; ++c0)
        weight[static_cast<size_t>(c0)] =
            binomial_capped(total - 1 - c0, m - 1, 1e18);
    double sum = 0.0;
    for (double w : weight)
        sum += w;
    const double per = sum / jobs;
    int begin = 0;
    double acc = 0.0;
    for (int c0 = 0; c0 < first_limit; ++c0) {
        acc += weight[static_cast<size_t>(c0)];
        if (acc >= per && static_cast<int>(ranges.size()) + 1 < jobs) {
            ranges.emplace_back(begin, c0 + 1);
            begin = c0 + 1;
            acc = 0.0;
        }
    }
    if (begin < first_limit)
        ranges.emplace_back(begin, first_limit);
    return ranges;
}

// ---- family predicates on raw degree data (no materialization) ----------

struct DegreeHistogram {
    // counts[d] for d in 0..m
    std::vector<int> counts;

    static DegreeHistogram of(const ScanInstance& inst) {
        DegreeHistogram hist;
        hist.counts.assign(static_cast<size_t>(inst.m) + 1, 0);
        for (int v = 0; v < inst.cand->n; ++v)
            ++hist.counts[static_cast<size_t>(inst.degrees[v])];
        return hist;
    }

    int at(int d) const {
        return (d >= 0 && d < static_cast<int>(counts.size()))
                   ? counts[static_cast<size_t>(d)]
                   : 0;
    }
};

// Sorted degrees equal (m, 2^twos, 1^(n-1-twos)); the m entry merges into
// the 2s when m == 2. Histogram counts always sum to n, so matching these
// buckets excludes every other degree.
bool pattern_center_plus_twos(const DegreeHistogram& hist, int m, int n, int twos) {
    if (m == 2)
        return hist.at(2) == twos + 1 && hist.at(1) == n - 1 - twos;
    return hist.at(m) == 1 && hist.at(2) == twos && hist.at(1) == n - 1 - twos;
}

bool light_lower_family(const ClassParams& p, const DegreeHistogram& hist) {
    // family attaining the entropy lower bound (maximal h)
    switch (p.cyclomatic) {
    case 0: // hyperstar: degrees (m, 1, ..., 1)
        return pattern_center_plus_twos(hist, p.m, p.vertex_count(), 0);
    case 1: // HII: degrees (m, 2, 1, ...)
        return pattern_center_plus_twos(hist, p.m, p.vertex_count(), 1);
    case 2: // HIV or HV: degrees (m, 2, 2, 1, ...)
        return pattern_center_plus_twos(hist, p.m, p.vertex_count(), 2);
    default:
        return false;
    }
}

bool light_upper_family(const ScanInstance& inst) {
    // max-degree-2 family attains the entropy upper bound in every class
    return inst.max_degree == 2;
}

// ---- extremal window (iso-classed candidates within 1e-9 of optimum) ----

struct WindowGroup {
    Hypergraph rep;
    std::vector<int> degrees; // non-increasing
    double h = 0.0;
    long long count = 0;
};

struct Window {
    bool minimize = true;
    bool has = false;
    double opt = 0.0;
    std::vector<WindowGroup> groups;

    bool better(double a, double b) const { return minimize ? a < b : a > b; }
    bool inside(double h) const { return std::abs(h - opt) <= kTieWindow; }

    void offer(const ScanInstance& inst, int iso_limit) {
        const double h = inst.h;
        if (!has) {
            has = true;
            opt = h;
        } else if (better(h, opt)) {
            opt = h;
            std::erase_if(groups, [&](const WindowGroup& g) { return !inside(g.h); });
        } else if (!inside(h)) {
            return;
        }
        if (!inside(h))
            return;
        std::vector<int> degs(inst.degrees, inst.degrees + inst.cand->n);
        std::sort(degs.begin(), degs.end(), std::greater<int>());
        Hypergraph mat = materialize(inst);
        for (WindowGroup& g : groups) {
            if (g.degrees != degs)
                continue;
            bool same = (inst.cand->n <= iso_limit) ? is_isomorphic(g.rep, mat, iso_limit)
                                                    : true;
            if (same) {
                ++g.count;
                return;
            }
        }
        groups.push_back(WindowGroup{std::move(mat), std::move(degs), h, 1});
    }

    void merge_from(Window& other, int iso_limit) {
        if (!other.has)
            return;
        if (!has) {
            *this = std::move(other);
            return;
        }
        if (better(other.opt, opt)) {
            opt = other.opt;
            std::erase_if(groups, [&](const WindowGroup& g) { return !inside(g.h); });
        }
        for (WindowGroup& g : other.groups) {
            if (!inside(g.h))
                continue;
            bool merged = false;
            for (WindowGroup& mine : groups) {
                if (mine.degrees != g.degrees)
                    continue;
                bool same = (g.rep.vertex_count() <= iso_limit)
                                ? is_isomorphic(mine.rep, g.rep, iso_limit)
                                : true;
                if (same) {
                    mine.count += g.count;
                    merged = true;
                    break;
                }
            }
            if (!merged)
                groups.push_back(std::move(g));
        }
    }
};

// ---- whole-class isomorphism accounting ----------------------------------

struct IsoClasses {
    bool enabled = false;
    int iso_limit = 14;
    // signature (degree multiset, intersection profile) -> rep indices
    std::map<std::pair<std::vector<int>, std::vector<int>>, std::vector<size_t>> buckets;
    std::vector<Hypergraph> reps;
    std::vector<long long> counts;

    static std::vector<int> intersection_profile(const ScanInstance& inst) {
        std::vector<int> sizes;
        for (int i = 0; i < inst.m; ++i)
            for (int j = i + 1; j < inst.m; ++j) {
                std::uint64_t a = inst.cand->masks[static_cast<size_t>(inst.chosen[i])];
                std::uint64_t b = inst.cand->masks[static_cast<size_t>(inst.chosen[j])];
                sizes.push_back(std::popcount(a & b));
            }
        std::sort(sizes.begin(), sizes.end());
        return sizes;
    }

    void offer(const ScanInstance& inst) {
        if (!enabled)
            return;
        std::vector<int> degs(inst.degrees, inst.degrees + inst.cand->n);
        std::sort(degs.begin(), degs.end(), std::greater<int>());
        auto key = std::make_pair(std::move(degs), intersection_profile(inst));
        auto& bucket = buckets[key];
        Hypergraph mat = materialize(inst);
        for (size_t idx : bucket) {
            if (is_isomorphic(reps[idx], mat, iso_limit)) {
                ++counts[idx];
                return;
            }
        }
        bucket.push_back(reps.size());
        reps.push_back(std::move(mat));
        counts.push_back(1);
    }

    void merge_from(IsoClasses& other) {
        if (!enabled)
            return;
        for (auto& [key, bucket] : other.buckets) {
            auto& mine = buckets[key];
            for (size_t oidx : bucket) {
                bool merged = false;
                for (size_t idx : mine) {
                    if (is_isomorphic(reps[idx], other.reps[oidx], iso_limit)) {
                        counts[idx] += other.counts[oidx];
                        merged = true;
                        break;
                    }
                }
                if (!merged) {
                    mine.push_back(reps.size());
                    reps.push_back(std::move(other.reps[oidx]));
                    counts.push_back(other.counts[oidx]);
                }
            }
        }
    }
};

struct PartialScan {
    long long count = 0;
    Window min_side{true};
    Window max_side{false};
    IsoClasses iso;

    long long lower_attain = 0;
    long long upper_attain = 0;
    bool bounds_ok = true;
    bool lower_eq_ok = true;
    bool upper_eq_ok = true;
    bool identity_ok = true;
    std::optional<Hypergraph> counterexample;
    std::string reason;

    void flag(const ScanInstance& inst, bool& ok, const std::string& why) {
        if (ok) {
            ok = false;
            if (!counterexample) {
                counterexample = materialize(inst);
                reason = why;
            }
        }
    }
};

} // namespace

double search_space_size(const ClassParams& p) {
    const int n = p.vertex_count();
    if (n < p.k || n <= 0)
        return 0.0;
    const double cap = 1e30;
    const double candidates = binomial_capped(n, p.k, cap);
    if (candidates >= cap)
        return cap;
    return binomial_capped(static_cast<long long>(candidates), p.m, cap);
}

void for_each_instance(const ClassParams& p, const ScanOptions& opts,
                       const std::function<void(const Hypergraph&)>& visit) {
    check_scan_params(p, opts);
    Candidates cand = build_candidates(p.vertex_count(), p.k);
    std::vector<double> table = dlogd_table(p.m);
    scan_range(cand, p.m, opts.pruned, 0, static_cast<int>(cand.masks.size()), table,
               [&](const ScanInstance& inst) { visit(materialize(inst)); });
}

std::vector<Hypergraph> enumerate_class(const ClassParams& p, const ScanOptions& opts) {
    std::vector<Hypergraph> out;
    for_each_instance(p, opts, [&](const Hypergraph& h) { out.push_back(h); });
    return out;
}

long long count_instances(const ClassParams& p, const ScanOptions& opts) {
    check_scan_params(p, opts);
    Candidates cand = build_candidates(p.vertex_count(), p.k);
    std::vector<double> table = dlogd_table(p.m);
    const int total = static_cast<int>(cand.masks.size());
    const int first_limit = opts.pruned ? std::min(total, cand.with_vertex0) : total;
    auto ranges = shard_ranges(total, first_limit, p.m, opts.jobs);

    std::vector<long long> partial(ranges.size(), 0);
    auto work = [&](size_t i) {
        long long local = 0;
        scan_range(cand, p.m, opts.pruned, ranges[i].first, ranges[i].second, table,
                   [&](const ScanInstance&) { ++local; });
        partial[i] = local;
    };
    if (opts.jobs <= 1 || ranges.size() <= 1) {
        for (size_t i = 0; i < ranges.size(); ++i)
            work(i);
    } else {
        std::vector<std::thread> threads;
        for (size_t i = 0; i < ranges.size(); ++i)
            threads.emplace_back(work, i);
        for (auto& t : threads)
            t.join();
    }
    long long count = 0;
    for (long long c : partial)
        count += c;
    return count;
}

StreamDigest digest_class(const ClassParams& p, const ScanOptions& opts) {
    StreamDigest digest;
    for_each_instance(p, opts, [&](const Hypergraph& h) {
        ++digest.count;
        auto feed = [&](int value) {
            // FNV-1a over the int's bytes
            unsigned char bytes[sizeof(int)];
            std::memcpy(bytes, &value, sizeof(int));
            for (unsigned char b : bytes) {
                digest.hash ^= b;
                digest.hash *= 1099511628211ULL;
            }
        };
        feed(h.k());
        feed(h.vertex_count());
        for (const Edge& e : h.edges())
            for (int v : e)
                feed(v);
    });
    return digest;
}

bool ExtremalReport::pass() const {
    if (empty_class)
        return true;
    return bounds_ok && lower_equality_ok && upper_equality_ok && identity_ok;
}

ExtremalReport extremal_report(const ClassParams& p, const ScanOptions& opts) {
    if (p.m < 2)
        throw Error(ErrorCode::InvalidParameters, "extremal reports require m >= 2");
    check_scan_params(p, opts);

    ExtremalReport report;
    report.params = p;
    report.entropy_bounds = theorem_bounds(p.tag(), p.k, p.m);
    report.h_value_bounds = h_bounds(p.tag(), p.k, p.m);

    Candidates cand = build_candidates(p.vertex_count(), p.k);
    std::vector<double> table = dlogd_table(p.m);
    const int n = p.vertex_count();
    const double km = static_cast<double>(p.k) * static_cast<double>(p.m);
    const double log_km = std::log2(km);
    const double i_lo = report.entropy_bounds.lower;
    const double i_hi = report.entropy_bounds.upper;
    const bool use_iso = n <= opts.iso_limit;

    const int total = static_cast<int>(cand.masks.size());
    const int first_limit = opts.pruned ? std::min(total, cand.with_vertex0) : total;
    auto ranges = shard_ranges(total, first_limit, p.m, opts.jobs);

    std::vector<PartialScan> partials(ranges.size());
    auto work = [&](size_t idx) {
        PartialScan& ps = partials[idx];
        ps.iso.enabled = use_iso;
        ps.iso.iso_limit = opts.iso_limit;
        scan_range(
            cand, p.m, opts.pruned, ranges[idx].first, ranges[idx].second, table,
            [&](const ScanInstance& inst) {
                ++ps.count;
                const double entropy = log_km - inst.h / km;

                // Identity: the definition-form value must match the h-form.
                double direct = 0.0;
                for (int v = 0; v < n; ++v) {
                    const double d = static_cast<double>(inst.degrees[v]);
                    direct += (d / km) * std::log2(d);
                }
                direct = log_km - direct;
                if (std::abs(direct - entropy) > kTol)
                    ps.flag(inst, ps.identity_ok,
                            "entropy identity violated: definition form and h form differ");

                if (entropy < i_lo - kTol || entropy > i_hi + kTol)
                    ps.flag(inst, ps.bounds_ok, "entropy outside the closed-form bounds");

                DegreeHistogram hist = DegreeHistogram::of(inst);
                const bool at_lower = std::abs(entropy - i_lo) <= kTol;
                const bool lower_family = light_lower_family(p, hist);
                if (at_lower)
                    ++ps.lower_attain;
                if (at_lower != lower_family)
                    ps.flag(inst, ps.lower_eq_ok,
                            at_lower
                                ? "attains the entropy lower bound but is not in the witness family"
                                : "witness family member missing the entropy lower bound");

                const bool at_upper = std::abs(entropy - i_hi) <= kTol;
                const bool upper_family = light_upper_family(inst);
                if (at_upper)
                    ++ps.upper_attain;
                if (at_upper != upper_family)
                    ps.flag(inst, ps.upper_eq_ok,
                            at_upper
                                ? "attains the entropy upper bound but is not in the witness family"
                                : "witness family member missing the entropy upper bound");

                ps.min_side.offer(inst, opts.iso_limit);
                ps.max_side.offer(inst, opts.iso_limit);
                ps.iso.offer(inst);
            });
    };

    if (opts.jobs <= 1 || ranges.size() <= 1) {
        for (size_t i = 0; i < ranges.size(); ++i)
            work(i);
    } else {
        std::vector<std::thread> threads;
        for (size_t i = 0; i < ranges.size(); ++i)
            threads.emplace_back(work, i);
        for (auto& t : threads)
            t.join();
    }

    // Merge shard results in stream order.
    PartialScan merged;
    merged.iso.enabled = use_iso;
    merged.iso.iso_limit = opts.iso_limit;
    for (PartialScan& ps : partials) {
        merged.count += ps.count;
        merged.lower_attain += ps.lower_attain;
        merged.upper_attain += ps.upper_attain;
        merged.min_side.merge_from(ps.min_side, opts.iso_limit);
        merged.max_side.merge_from(ps.max_side, opts.iso_limit);
        merged.iso.merge_from(ps.iso);
        if (!ps.bounds_ok) merged.bounds_ok = false;
        if (!ps.lower_eq_ok) merged.lower_eq_ok = false;
        if (!ps.upper_eq_ok) merged.upper_eq_ok = false;
        if (!ps.identity_ok) merged.identity_ok = false;
        if (!merged.counterexample && ps.counterexample) {
            merged.counterexample = std::move(ps.counterexample);
            merged.reason = ps.reason;
        }
    }

    report.labeled_count = merged.count;
    report.empty_class = (merged.count == 0);
    report.bounds_ok = merged.bounds_ok;
    report.lower_equality_ok = merged.lower_eq_ok;
    report.upper_equality_ok = merged.upper_eq_ok;
    report.identity_ok = merged.identity_ok;
    report.lower_attain_count = merged.lower_attain;
    report.upper_attain_count = merged.upper_attain;
    report.counterexample = std::move(merged.counterexample);
    report.counterexample_reason = merged.reason;
    if (use_iso && !report.empty_class)
        report.iso_class_count = static_cast<long long>(merged.iso.reps.size());

    if (report.empty_class) {
        report.min_h = report.max_h = std::nan("");
        report.min_entropy = report.max_entropy = std::nan("");
        report.warnings.push_back("class is empty: nothing to enumerate");
        return report;
    }

    report.min_h = merged.min_side.opt;
    report.max_h = merged.max_side.opt;
    report.min_entropy = log_km - report.max_h / km;
    report.max_entropy = log_km - report.min_h / km;

    auto collect = [&](Window& side, std::vector<Extremizer>& out, const char* label) {
        std::vector<std::vector<int>> optimum_multisets;
        for (WindowGroup& g : side.groups) {
            if (g.h == side.opt) {
                std::vector<FamilyTag> tags = family_tags(g.rep);
                if (std::find(optimum_multisets.begin(), optimum_multisets.end(),
                              g.degrees) == optimum_multisets.end())
                    optimum_multisets.push_back(g.degrees);
                out.push_back(Extremizer{std::move(g.rep), std::move(tags),
                                         std::move(g.degrees), g.h, g.count});
            } else {
                report.warnings.push_back(
                    std::string("near-tie at the ") + label + " within 1e-9: h=" +
                    std::to_string(g.h) + " vs optimum " + std::to_string(side.opt));
            }
        }
        if (optimum_multisets.size() > 1)
            report.warnings.push_back(
                std::string("distinct degree multisets share the exact ") + label +
                " value; reported separately");
    };
    // h maximizers realize the entropy minimum and vice versa.
    collect(merged.max_side, report.entropy_minimizers, "maximum of h");
    collect(merged.min_side, report.entropy_maximizers, "minimum of h");
    return report;
}

VerifyResult verify_theorem(TheoremId id, int k, int m, const ScanOptions& opts) {
    VerifyResult result;
    result.theorem = id;
    result.report = extremal_report(class_params(theorem_class(id), k, m), opts);
    result.pass = result.report.pass();
    if (result.report.empty_class)
        result.notes.push_back("class is empty at k=" + std::to_string(k) +
                               ", m=" + std::to_string(m) + "; bounds hold vacuously");
    if (id == TheoremId::BicyclicBounds && k == 3)
        result.notes.push_back(
            "HV is infeasible at k=3 (two distinct 3-edges cannot share 3 vertices); "
            "lower-bound extremizers can only be HIV");
    if (id == TheoremId::BicyclicBounds && m == 2 && !result.report.empty_class)
        result.notes.push_back(
            "HIV is infeasible at m=2 (two distinct edge pairs need at least 3 edges); "
            "lower-bound extremizers can only be HV");
    if (!result.report.empty_class &&
        std::abs(result.report.entropy_bounds.upper - result.report.entropy_bounds.lower) <=
            kTol)
        result.notes.push_back("lower and upper bounds coincide at m=" + std::to_string(m) +
                               "; every member is extremal in both directions");
    return result;
}

int Rng::below(int bound) {
    if (bound <= 0)
        throw Error(ErrorCode::InvalidParameters, "Rng::below requires a positive bound");
    const std::uint64_t b = static_cast<std::uint64_t>(bound);
    const std::uint64_t limit = ~std::uint64_t(0) - (~std::uint64_t(0) % b + 1) % b;
    std::uint64_t x;
    do {
        x = next();
    } while (x > limit);
    return static_cast<int>(x % b);
}

namespace {

struct RawHypergraph {
    int k = 0;
    int n = 0;
    std::vector<std::vector<int>> edges;

    std::vector<int> degrees() const {
        std::vector<int> deg(static_cast<size_t>(n), 0);
        for (const auto& e : edges)
            for (int v : e)
                ++deg[static_cast<size_t>(v)];
        return deg;
    }
};

RawHypergraph random_supertree_raw(int k, int m, Rng& rng) {
    RawHypergraph g;
    g.k = k;
    g.n = k;
    std::vector<int> first(static_cast<size_t>(k));
    for (int i = 0; i < k; ++i)
        first[static_cast<size_t>(i)] = i;
    g.edges.push_back(std::move(first));
    for (int e = 1; e < m; ++e) {
        int attach = rng.below(g.n);
        std::vector<int> edge{attach};
        for (int i = 0; i < k - 1; ++i)
            edge.push_back(g.n + i);
        g.n += k - 1;
        g.edges.push_back(std::move(edge));
    }
    return g;
}

// Merges a random degree-1 vertex into a random vertex outside its edge,
// raising the cyclomatic number by one. Returns false when every attempt
// collides with an existing edge.
bool fuse_once(RawHypergraph& g, Rng& rng, int attempts) {
    for (int t = 0; t < attempts; ++t) {
        std::vector<int> deg = g.degrees();
        std::vector<int> leaves;
        for (int v = 0; v < g.n; ++v)
            if (deg[static_cast<size_t>(v)] == 1)
                leaves.push_back(v);
        if (leaves.empty() || g.n <= g.k)
            return false;
        int a = leaves[static_cast<size_t>(rng.below(static_cast<int>(leaves.size())))];
        size_t host = 0;
        for (size_t i = 0; i < g.edges.size(); ++i)
            if (std::find(g.edges[i].begin(), g.edges[i].end(), a) != g.edges[i].end()) {
                host = i;
                break;
            }
        std::vector<int> outside;
        for (int v = 0; v < g.n; ++v)
            if (std::find(g.edges[host].begin(), g.edges[host].end(), v) ==
                g.edges[host].end())
                outside.push_back(v);
        if (outside.empty())
            return false;
        int b = outside[static_cast<size_t>(rng.below(static_cast<int>(outside.size())))];

        std::vector<int> candidate = g.edges[host];
        candidate.erase(std::find(candidate.begin(), candidate.end(), a));
        candidate.push_back(b);
        std::sort(candidate.begin(), candidate.end());
        bool duplicate = false;
        for (size_t i = 0; i < g.edges.size() && !duplicate; ++i) {
            if (i == host)
                continue;
            std::vector<int> other = g.edges[i];
            std::sort(other.begin(), other.end());
            duplicate = (other == candidate);
        }
        if (duplicate)
            continue;

        g.edges[host] = candidate;
        // drop label a, shifting higher labels down
        for (auto& e : g.edges)
            for (int& v : e)
                if (v > a)
                    --v;
        --g.n;
        return true;
    }
    return false;
}

} // namespace

Hypergraph random_instance(StructureTag cls, int k, int m, std::uint64_t seed) {
    Rng rng(seed);
    return random_instance(cls, k, m, rng);
}

Hypergraph random_instance(StructureTag cls, int k, int m, Rng& rng) {
    if (k < 3)
        throw Error(ErrorCode::InvalidParameters, "random instances require k >= 3");
    const ClassParams p = class_params(cls, k, m);
    if (m < 1 || (p.cyclomatic >= 1 && m < 2) ||
        (p.cyclomatic == 2 && k == 3 && m < 3))
        throw Error(ErrorCode::InvalidParameters,
                    "class " + std::string(to_string(cls)) + " is empty at k=" +
                        std::to_string(k) + ", m=" + std::to_string(m));

    constexpr int kRestarts = 64;
    for (int attempt = 0; attempt < kRestarts; ++attempt) {
        RawHypergraph g = random_supertree_raw(k, m, rng);
        bool ok = true;
        for (int c = 0; c < p.cyclomatic && ok; ++c)
            ok = fuse_once(g, rng, 100);
        if (!ok)
            continue;
        Hypergraph h = Hypergraph::validate(k, g.n, std::move(g.edges));
        if (classify(h).tag != cls)
            throw Error(ErrorCode::RetryExhausted,
                        "constructed instance failed its class check");
        return h;
    }
    throw Error(ErrorCode::RetryExhausted,
                "could not realize the requested class after bounded retries");
}

Graph random_connected_graph(int n, int extra_edges, Rng& rng) {
    if (n < 1)
        throw Error(ErrorCode::InvalidParameters, "graph needs at least one vertex");
    Graph g;
    g.n = n;
    std::set<std::pair<int, int>> used;
    for (int v = 1; v < n; ++v) {
        int parent = rng.below(v);
        g.edges.emplace_back(parent, v);
        used.insert({parent, v});
    }
    std::vector<std::pair<int, int>> free_pairs;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (!used.count({i, j}))
                free_pairs.emplace_back(i, j);
    if (extra_edges > static_cast<int>(free_pairs.size()))
        throw Error(ErrorCode::InvalidParameters,
                    "not enough non-tree pairs for " + std::to_string(extra_edges) +
                        " extra edges");
    for (int e = 0; e < extra_edges; ++e) {
        int pick = rng.below(static_cast<int>(free_pairs.size()));
        g.edges.push_back(free_pairs[static_cast<size_t>(pick)]);
        free_pairs.erase(free_pairs.begin() + pick);
    }
    return g;
}

} // namespace hyperent
