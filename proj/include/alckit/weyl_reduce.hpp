#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "alckit/alcove.hpp"
#include "alckit/parahoric.hpp"
#include "alckit/root_system.hpp"

namespace alckit {

// ---------------------------------------------------------------------------
// Affine Weyl reduction to the alcove and the limit procedure: from (l, eta)
// to a face I, the co-character eta_I and the chain labels.
// ---------------------------------------------------------------------------

// Simple affine reflections at level 1:
//   s_i (i >= 1): eta - <alpha_i, eta> alpha_i^v
//   s_0:          eta - (<theta, eta> - 1) theta^v
inline Coweight reflect(const RootSystem& rs, int i, const Coweight& eta) {
    if (i < 0 || i > rs.rank)
        throw std::out_of_range("reflect: index must lie in 0..r");
    if (i == 0) {
        Rat slack = pairing(rs.highest_root, eta, rs) - Rat(1);
        return eta - rs.theta_coroot().scaled(slack);
    }
    std::vector<long long> e((std::size_t)rs.rank, 0);
    e[(std::size_t)(i - 1)] = 1;
    Rat v = pairing(Root{e}, eta, rs);
    Coweight out = eta;
    out.coeffs[(std::size_t)(i - 1)] -= v;
    return out;
}

struct ReductionTrace {
    Coweight input;
    std::vector<int> word; // reflection indices, applied left to right
    Coweight output;
};

// Replays a reflection word; used by tests to validate traces.
inline Coweight replay_word(const RootSystem& rs, const Coweight& eta,
                            const std::vector<int>& word) {
    Coweight cur = eta;
    for (int i : word)
        cur = reflect(rs, i, cur);
    return cur;
}

// Reduce to the alcove: apply s_i at the lowest violated finite index first,
// s_0 only when all finite inequalities hold.  The closed alcove is a strict
// fundamental domain for the level-1 affine Weyl action, so the output is a
// complete invariant of the orbit.
inline ReductionTrace reduce_to_alcove(const RootSystem& rs, const Coweight& eta) {
    static constexpr long long kIterationCap = 1000000;
    ReductionTrace tr;
    tr.input = eta;
    Coweight cur = eta;
    for (long long step = 0;; ++step) {
        if (step > kIterationCap)
            throw std::runtime_error("reduce_to_alcove: iteration cap exceeded (bug)");
        int violated = -1;
        for (int i = 1; i <= rs.rank; ++i) {
            std::vector<long long> e((std::size_t)rs.rank, 0);
            e[(std::size_t)(i - 1)] = 1;
            if (pairing(Root{e}, cur, rs) < Rat(0)) {
                violated = i;
                break;
            }
        }
        if (violated < 0 && pairing(rs.highest_root, cur, rs) > Rat(1))
            violated = 0;
        if (violated < 0)
            break;
        cur = reflect(rs, violated, cur);
        tr.word.push_back(violated);
    }
    tr.output = cur;
    return tr;
}

struct GiesekerLimit {
    long long k_g;
    FaceLabel face;
    Coweight eta_face;           // eta_I = sum_{i in I} eta_i
    long long chain_length;      // |I| - 1
    std::vector<int> node_labels; // I in ascending order
    ReductionTrace trace;
};

// From a mu_l-structure eta (integral co-character) to the face its reduced
// representative eta/l lands in.  Verifies the slice-equality that makes the
// replacement legitimate: the reduced point and the barycenter of eta_I have
// identical truncated parahoric slices.
inline GiesekerLimit gieseker_limit(const RootSystem& rs, long long l, const Coweight& eta,
                                    int slice_truncation = 5) {
    if (l < 1)
        throw std::invalid_argument("gieseker_limit: l must be >= 1");
    if (!eta.is_integral())
        throw std::invalid_argument("gieseker_limit: eta must be integral");
    ReductionTrace tr = reduce_to_alcove(rs, eta.scaled(Rat(1, l)));
    AlcovePoint reduced{tr.output};
    FaceLabel I = face_of(rs, reduced);

    ParahoricSlice a = parahoric_slice(rs, reduced.eta, slice_truncation);
    ParahoricSlice b = parahoric_slice(rs, face_barycenter(rs, I).eta, slice_truncation);
    if (a.p_roots != b.p_roots || a.levi_roots != b.levi_roots)
        throw std::logic_error("gieseker_limit: slice mismatch between reduced point and face");

    GiesekerLimit out{alcove_orders(rs).k_g,
                      I,
                      eta_of_face(rs, I),
                      (long long)I.support.size() - 1,
                      I.support,
                      std::move(tr)};
    return out;
}

} // namespace alckit
