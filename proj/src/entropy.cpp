#include "hyperent/entropy.hpp"

#include <cmath>

namespace hyperent {

double degree_entropy(const Hypergraph& h, double t) {
    std::vector<int> degrees = h.vertex_degrees();
    double total = 0.0;
    for (int d : degrees)
        total += std::pow(static_cast<double>(d), t);
    double mixed = 0.0;
    for (int d : degrees) {
        double p = std::pow(static_cast<double>(d), t);
        mixed += (p / total) * std::log2(p);
    }
    return std::log2(total) - mixed;
}

double h_of_degrees(std::span<const int> degrees) {
    double sum = 0.0;
    for (int d : degrees)
        sum += static_cast<double>(d) * std::log2(static_cast<double>(d));
    return sum;
}

double h_value(const Hypergraph& h) {
    std::vector<int> degrees = h.vertex_degrees();
    return h_of_degrees(degrees);
}

BoundPair h_bounds(StructureTag cls, int k, int m) {
    if (k < 3 || m < 2)
        throw Error(ErrorCode::InvalidParameters,
                    "bounds require k >= 3 and m >= 2, got k=" + std::to_string(k) +
                        " m=" + std::to_string(m));
    const double md = static_cast<double>(m);
    BoundPair b;
    switch (cls) {
    case StructureTag::Supertree:
        b.lower = 2.0 * (md - 1.0);            // log 2 = 1 in base 2
        b.upper = md * std::log2(md);
        b.lower_witness = {FamilyTag::TStar};
        b.upper_witness = {FamilyTag::Hyperstar};
        return b;
    case StructureTag::Unicyclic:
        b.lower = 2.0 * md;
        b.upper = md * std::log2(md) + 2.0;
        b.lower_witness = {FamilyTag::HI};
        b.upper_witness = {FamilyTag::HII};
        return b;
    case StructureTag::Bicyclic:
        b.lower = 2.0 * (md + 1.0);
        b.upper = md * std::log2(md) + 4.0;
        b.lower_witness = {FamilyTag::HIII};
        b.upper_witness = {FamilyTag::HIV, FamilyTag::HV};
        return b;
    case StructureTag::Other:
        break;
    }
    throw Error(ErrorCode::InvalidParameters, "no bounds for class 'other'");
}

BoundPair theorem_bounds(StructureTag cls, int k, int m) {
    BoundPair h = h_bounds(cls, k, m);
    const double km = static_cast<double>(k) * static_cast<double>(m);
    BoundPair b;
    b.lower = std::log2(km) - h.upper / km;
    b.upper = std::log2(km) - h.lower / km;
    b.lower_witness = h.upper_witness;
    b.upper_witness = h.lower_witness;
    return b;
}

} // namespace hyperent
