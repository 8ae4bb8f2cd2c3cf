#pragma once

#include <algorithm>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "alckit/alcove.hpp"
#include "alckit/root_system.hpp"

namespace alckit {

// ---------------------------------------------------------------------------
// Degree-truncated models of parahoric subgroups P(eta).
//
// A parahoric is represented purely by the sign pattern of
// n + <alpha, eta> over affine roots (n, alpha) with |n| <= N.  Group
// elements never appear; everything consumed downstream is a statement
// about this Lie-algebra data.
// ---------------------------------------------------------------------------

// Affine root (degree, finite part).  An all-zero finite part encodes the
// imaginary root (n, 0), legal only for n != 0.
struct AffineRoot {
    long long degree;
    std::vector<long long> finite;

    static AffineRoot make(long long degree, std::vector<long long> finite) {
        bool imaginary = std::all_of(finite.begin(), finite.end(),
                                     [](long long v) { return v == 0; });
        if (imaginary && degree == 0)
            throw std::invalid_argument("AffineRoot: (0, 0) is not an affine root");
        return AffineRoot{degree, std::move(finite)};
    }

    bool imaginary() const {
        return std::all_of(finite.begin(), finite.end(), [](long long v) { return v == 0; });
    }

    AffineRoot negated() const {
        std::vector<long long> f = finite;
        for (auto& v : f)
            v = -v;
        return AffineRoot{-degree, std::move(f)};
    }

    friend bool operator==(const AffineRoot& a, const AffineRoot& b) {
        return a.degree == b.degree && a.finite == b.finite;
    }
    friend bool operator<(const AffineRoot& a, const AffineRoot& b) {
        if (a.degree != b.degree)
            return a.degree < b.degree;
        return a.finite < b.finite;
    }

    std::string str() const {
        std::string s = "(" + std::to_string(degree) + ";";
        for (std::size_t i = 0; i < finite.size(); ++i)
            s += (i ? "," : "") + std::to_string(finite[i]);
        return s + ")";
    }
};

// n + <alpha, eta>, with <0, eta> = 0 for the imaginary part.
inline Rat affine_pairing(const AffineRoot& a, const Coweight& eta, const RootSystem& rs) {
    Rat v(a.degree);
    if (!a.imaginary())
        v += pairing(Root{a.finite}, eta, rs);
    return v;
}

// All affine roots with |degree| <= N, sorted by (degree, finite part).
inline std::vector<AffineRoot> affine_roots_up_to(const RootSystem& rs, int N) {
    std::vector<AffineRoot> out;
    std::vector<Root> roots = rs.all_roots();
    std::vector<long long> zero((std::size_t)rs.rank, 0);
    for (long long n = -N; n <= N; ++n) {
        if (n != 0)
            out.push_back(AffineRoot{n, zero});
        for (const Root& a : roots)
            out.push_back(AffineRoot{n, a.coeffs});
    }
    std::sort(out.begin(), out.end());
    return out;
}

struct ParahoricSlice {
    Coweight eta;
    int truncation;
    std::vector<AffineRoot> p_roots;        // pairing >= 0
    std::vector<AffineRoot> levi_roots;     // pairing == 0
    std::vector<AffineRoot> unip_roots;     // pairing > 0
    std::vector<AffineRoot> unip_neg_roots; // pairing < 0
};

inline ParahoricSlice parahoric_slice(const RootSystem& rs, const Coweight& eta, int N) {
    if (N < 1)
        throw std::invalid_argument("parahoric_slice: truncation must be >= 1");
    ParahoricSlice s;
    s.eta = eta;
    s.truncation = N;
    for (AffineRoot& a : affine_roots_up_to(rs, N)) {
        int sign = affine_pairing(a, eta, rs).sign();
        if (sign >= 0)
            s.p_roots.push_back(a);
        if (sign == 0)
            s.levi_roots.push_back(a);
        else if (sign > 0)
            s.unip_roots.push_back(a);
        else
            s.unip_neg_roots.push_back(a);
    }
    return s;
}

// Canonical dump: one line "n;m_1,...,m_r;class" per affine root.
inline std::string slice_text(const ParahoricSlice& s) {
    std::ostringstream os;
    auto emit = [&](const std::vector<AffineRoot>& v, const char* cls) {
        for (const AffineRoot& a : v) {
            os << a.degree << ";";
            for (std::size_t i = 0; i < a.finite.size(); ++i)
                os << (i ? "," : "") << a.finite[i];
            os << ";" << cls << "\n";
        }
    };
    emit(s.levi_roots, "levi");
    emit(s.unip_roots, "unip");
    emit(s.unip_neg_roots, "unip_neg");
    return os.str();
}

// P_I = intersection of the P(eta_i), checked as truncated affine-root sets.
// The left side is the slice of the barycenter eta_I/|I|, the level-1
// representative of the co-character sum (summing vertices also sums their
// levels, so the raw eta_I must be rescaled before a level-1 slice is taken).
// For I = {}, both sides are the slice of the trivial co-character.
inline bool verify_intersection(const RootSystem& rs, const std::vector<int>& I, int N) {
    for (int i : I)
        if (i < 0 || i > rs.rank)
            throw std::invalid_argument("verify_intersection: label out of range");
    if (I.empty())
        return true;
    FaceLabel f = FaceLabel::make(I, rs.rank);
    std::vector<AffineRoot> lhs = parahoric_slice(rs, face_barycenter(rs, f).eta, N).p_roots;
    std::vector<Coweight> v = alcove_vertices(rs);
    std::vector<AffineRoot> rhs;
    bool first = true;
    for (int i : f.support) {
        std::vector<AffineRoot> cur = parahoric_slice(rs, v[(std::size_t)i], N).p_roots;
        if (first) {
            rhs = std::move(cur);
            first = false;
        } else {
            std::vector<AffineRoot> inter;
            std::set_intersection(rhs.begin(), rhs.end(), cur.begin(), cur.end(),
                                  std::back_inserter(inter));
            rhs = std::move(inter);
        }
    }
    return lhs == rhs;
}

// ---------------------------------------------------------------------------
// Finite Levi data of the parabolic P(eta_I) in G.
// ---------------------------------------------------------------------------

struct FiniteLeviData {
    FaceLabel I;
    std::vector<Root> levi_pos_roots; // positive alpha with <alpha, eta_I> = 0
    std::vector<Root> u_roots;        // positive alpha with <alpha, eta_I> > 0
    long long dim_l;                  // r + 2 |levi_pos_roots|
    long long dim_u;                  // |u_roots|
    long long dim_z;                  // r - #simple roots among levi_pos_roots
};

inline FiniteLeviData finite_levi_data(const RootSystem& rs, const FaceLabel& I) {
    FiniteLeviData d{I, {}, {}, 0, 0, 0};
    Coweight eta = eta_of_face(rs, I);
    long long simples_in_levi = 0;
    for (const Root& a : rs.positive_roots) {
        Rat v = pairing(a, eta, rs);
        if (v.is_zero()) {
            d.levi_pos_roots.push_back(a);
            if (a.height() == 1)
                ++simples_in_levi;
        } else {
            d.u_roots.push_back(a);
        }
    }
    d.dim_l = rs.rank + 2 * (long long)d.levi_pos_roots.size();
    d.dim_u = (long long)d.u_roots.size();
    d.dim_z = rs.rank - simples_in_levi;
    return d;
}

} // namespace alckit
