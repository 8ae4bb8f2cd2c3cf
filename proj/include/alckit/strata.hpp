#pragma once

#include <algorithm>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "alckit/alcove.hpp"
#include "alckit/parahoric.hpp"
#include "alckit/root_system.hpp"

namespace alckit {

// ---------------------------------------------------------------------------
// Boundary orbit labels of the loop-group wonderful embedding: all 2^{r+1}
// subsets of {0..r}, their finite report data and the incidence poset.
// ---------------------------------------------------------------------------

struct OrbitLabel {
    std::vector<int> indices; // sorted subset of {0..r}; may be empty

    bool empty() const { return indices.empty(); }

    std::string str() const {
        std::string s = "{";
        for (std::size_t i = 0; i < indices.size(); ++i)
            s += (i ? "," : "") + std::to_string(indices[i]);
        return s + "}";
    }

    friend bool operator==(const OrbitLabel& a, const OrbitLabel& b) {
        return a.indices == b.indices;
    }
};

// Canonical order: by size, then lexicographic.
inline std::vector<OrbitLabel> enumerate_orbits(const RootSystem& rs) {
    int n = rs.rank + 1;
    std::vector<OrbitLabel> out;
    out.reserve((std::size_t)1 << n);
    for (unsigned long long mask = 0; mask < (1ull << n); ++mask) {
        OrbitLabel lab;
        for (int i = 0; i < n; ++i)
            if (mask & (1ull << i))
                lab.indices.push_back(i);
        out.push_back(std::move(lab));
    }
    std::sort(out.begin(), out.end(), [](const OrbitLabel& a, const OrbitLabel& b) {
        if (a.indices.size() != b.indices.size())
            return a.indices.size() < b.indices.size();
        return a.indices < b.indices;
    });
    return out;
}

struct OrbitReport {
    OrbitLabel label;
    std::vector<bool> exotic_flags; // per element: is the singleton face exotic
    std::optional<FiniteLeviData> fin_levi; // absent for the open stratum
    long long dim_levi_ad_fin = 0;          // dim_L - dim_Z of the finite Levi
    bool z0_trivial = false;                // the singleton-only triviality rule
    long long chain_length = -1;            // |I| - 1; -1 marks the open stratum
};

inline OrbitReport orbit_report(const RootSystem& rs, const OrbitLabel& I) {
    OrbitReport r;
    r.label = I;
    for (int i : I.indices)
        r.exotic_flags.push_back(i != 0);
    if (I.empty())
        return r; // open stratum: no Levi data
    FaceLabel f = FaceLabel::make(I.indices, rs.rank);
    r.fin_levi = finite_levi_data(rs, f);
    r.dim_levi_ad_fin = r.fin_levi->dim_l - r.fin_levi->dim_z;
    r.z0_trivial = I.indices.size() == 1;
    r.chain_length = (long long)I.indices.size() - 1;
    return r;
}

// Covering edges I -> I + {j}; the partial order is inclusion, the maximal
// element {0..r} is where the degeneration terminates.
inline std::vector<std::pair<OrbitLabel, OrbitLabel>> closure_poset(const RootSystem& rs) {
    std::vector<std::pair<OrbitLabel, OrbitLabel>> edges;
    for (const OrbitLabel& I : enumerate_orbits(rs)) {
        for (int j = 0; j <= rs.rank; ++j) {
            if (std::binary_search(I.indices.begin(), I.indices.end(), j))
                continue;
            OrbitLabel J = I;
            J.indices.push_back(j);
            std::sort(J.indices.begin(), J.indices.end());
            edges.emplace_back(I, J);
        }
    }
    return edges;
}

inline std::string emit_poset_dot(const RootSystem& rs) {
    std::ostringstream os;
    os << "digraph strata_" << rs.type.name() << " {\n";
    os << "  rankdir=BT;\n";
    for (const OrbitLabel& I : enumerate_orbits(rs)) {
        OrbitReport r = orbit_report(rs, I);
        os << "  \"" << I.str() << "\" [label=\"" << I.str() << "\\nchain_length="
           << r.chain_length << "\\nexotic=";
        for (std::size_t i = 0; i < r.exotic_flags.size(); ++i)
            os << (i ? "," : "") << (r.exotic_flags[i] ? "1" : "0");
        os << "\"];\n";
    }
    for (const auto& [a, b] : closure_poset(rs))
        os << "  \"" << a.str() << "\" -> \"" << b.str() << "\";\n";
    os << "}\n";
    return os.str();
}

} // namespace alckit
