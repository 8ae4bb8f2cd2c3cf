#pragma once

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "alckit/root_system.hpp"

namespace alckit {

// ---------------------------------------------------------------------------
// Affine Weyl alcove: vertices, barycentric coordinates, faces, orders.
//
// The alcove is the simplex {eta : 0 <= <alpha_i, eta>, <theta, eta> <= 1}.
// Its vertices are eta_0 = 0 and eta_j = omega_j^v / n_j.
// ---------------------------------------------------------------------------

struct AlcovePoint {
    Coweight eta;
};

// Returns a human-readable description of the violated inequality, or
// nullopt when eta lies in the (closed) alcove.
inline std::optional<std::string> alcove_violation(const RootSystem& rs, const Coweight& eta) {
    for (int i = 0; i < rs.rank; ++i) {
        std::vector<long long> e((std::size_t)rs.rank, 0);
        e[(std::size_t)i] = 1;
        Rat v = pairing(Root{e}, eta, rs);
        if (v < Rat(0))
            return "<alpha_" + std::to_string(i + 1) + ", eta> = " + v.str() + " < 0";
    }
    Rat t = pairing(rs.highest_root, eta, rs);
    if (t > Rat(1))
        return "<theta, eta> = " + t.str() + " > 1";
    return std::nullopt;
}

inline AlcovePoint make_alcove_point(const RootSystem& rs, const Coweight& eta) {
    if (auto why = alcove_violation(rs, eta))
        throw std::domain_error("point outside alcove: " + *why);
    return AlcovePoint{eta};
}

// Face of the alcove labeled by the support of the barycentric coordinates;
// the complementary vanishing set is recoverable.
struct FaceLabel {
    std::vector<int> support; // sorted, distinct, subset of {0..r}, nonempty

    static FaceLabel make(std::vector<int> s, int rank) {
        std::sort(s.begin(), s.end());
        s.erase(std::unique(s.begin(), s.end()), s.end());
        if (s.empty())
            throw std::invalid_argument("FaceLabel: empty support");
        if (s.front() < 0 || s.back() > rank)
            throw std::invalid_argument("FaceLabel: index out of range 0..r");
        return FaceLabel{std::move(s)};
    }

    bool contains(int i) const {
        return std::binary_search(support.begin(), support.end(), i);
    }

    friend bool operator==(const FaceLabel& a, const FaceLabel& b) {
        return a.support == b.support;
    }

    std::string str() const {
        std::string s = "{";
        for (std::size_t i = 0; i < support.size(); ++i)
            s += (i ? "," : "") + std::to_string(support[i]);
        return s + "}";
    }
};

struct AlcoveOrders {
    std::vector<long long> k_each; // k_0..k_r
    long long k_g;
};

// eta_0 = 0, eta_j = omega_j^v / n_j.
inline std::vector<Coweight> alcove_vertices(const RootSystem& rs) {
    std::vector<Coweight> v;
    v.reserve((std::size_t)rs.rank + 1);
    v.push_back(Coweight::zero(rs.rank));
    std::vector<Coweight> omega = fundamental_coweights(rs);
    for (int j = 1; j <= rs.rank; ++j)
        v.push_back(omega[(std::size_t)j - 1].scaled(Rat(1, rs.marks[(std::size_t)j - 1])));
    return v;
}

// k_i = least positive integer with k_i * eta_i in the coroot lattice,
// computed as the lcm of coefficient denominators; k_G = lcm(k_i).
inline AlcoveOrders alcove_orders(const RootSystem& rs) {
    AlcoveOrders o;
    o.k_g = 1;
    for (const Coweight& v : alcove_vertices(rs)) {
        long long k = v.denominator_lcm();
        o.k_each.push_back(k);
        o.k_g = lcm_ll(o.k_g, k);
    }
    return o;
}

// Barycentric coordinates (a_0..a_r): a_i = n_i <alpha_i, eta> for i >= 1 and
// a_0 = 1 - <theta, eta>.  Reconstruction sum a_i eta_i = eta is exact.
inline std::vector<Rat> barycentric(const RootSystem& rs, const AlcovePoint& p) {
    if (auto why = alcove_violation(rs, p.eta))
        throw std::domain_error("barycentric: point outside alcove: " + *why);
    std::vector<Rat> a((std::size_t)rs.rank + 1, Rat(0));
    for (int i = 1; i <= rs.rank; ++i) {
        std::vector<long long> e((std::size_t)rs.rank, 0);
        e[(std::size_t)i - 1] = 1;
        a[(std::size_t)i] = Rat(rs.marks[(std::size_t)i - 1]) * pairing(Root{e}, p.eta, rs);
    }
    a[0] = Rat(1) - pairing(rs.highest_root, p.eta, rs);
    return a;
}

inline FaceLabel face_of(const RootSystem& rs, const AlcovePoint& p) {
    std::vector<Rat> a = barycentric(rs, p);
    std::vector<int> s;
    for (int i = 0; i <= rs.rank; ++i)
        if (!a[(std::size_t)i].is_zero())
            s.push_back(i);
    return FaceLabel::make(std::move(s), rs.rank);
}

// A face is exotic iff it lies in Al_e = {<theta, eta> = 1}, i.e. a_0 = 0.
inline bool is_exotic(const FaceLabel& f) { return !f.contains(0); }

// eta_I = sum_{i in I} eta_i (eta_0 contributes zero).
inline Coweight eta_of_face(const RootSystem& rs, const FaceLabel& I) {
    std::vector<Coweight> v = alcove_vertices(rs);
    Coweight w = Coweight::zero(rs.rank);
    for (int i : I.support)
        w = w + v[(std::size_t)i];
    return w;
}

// Level-1 alcove representative of the ray through eta_I; this is the point
// whose parahoric slice equals the intersection of the vertex slices.
inline AlcovePoint face_barycenter(const RootSystem& rs, const FaceLabel& I) {
    Coweight w = eta_of_face(rs, I).scaled(Rat(1, (long long)I.support.size()));
    return make_alcove_point(rs, w);
}

} // namespace alckit
