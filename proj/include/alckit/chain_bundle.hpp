#pragma once

#include <algorithm>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "alckit/alcove.hpp"
#include "alckit/matrix.hpp"
#include "alckit/parahoric.hpp"
#include "alckit/root_system.hpp"

namespace alckit {

// ---------------------------------------------------------------------------
// Equivariant line bundles on twisted chains [R_n/mu_k] and exact H^0.
//
// A chain with n components carries n+1 fixed points p_0..p_n labeled by
// alcove vertex indices.  Sections are modeled monomial by monomial; the
// O(-p_0 - p_n) twist is realized as endpoint-vanishing constraints, and all
// gluing systems are solved by exact rational elimination.
// ---------------------------------------------------------------------------

struct TwistedChain {
    long long k;
    std::vector<int> labels; // i_0..i_n, distinct, each in 0..r

    int components() const { return (int)labels.size() - 1; } // n
};

inline TwistedChain make_twisted_chain(const RootSystem& rs, long long k,
                                       std::vector<int> labels) {
    if (k < 1)
        throw std::invalid_argument("TwistedChain: k must be >= 1");
    if (labels.empty() || (int)labels.size() > rs.rank + 1)
        throw std::invalid_argument("TwistedChain: need 1..r+1 labels");
    std::set<int> seen;
    for (int i : labels) {
        if (i < 0 || i > rs.rank)
            throw std::invalid_argument("TwistedChain: label out of range 0..r");
        if (!seen.insert(i).second)
            throw std::invalid_argument("TwistedChain: duplicate label");
    }
    return TwistedChain{k, std::move(labels)};
}

// Line bundle given by rational fixed-point weights w_0..w_n; component
// degrees are d_j = k (w_{j-1} - w_j) and must come out integral.
struct EquivLine {
    std::vector<Rat> weights;
    std::vector<long long> degrees;
};

inline EquivLine make_equiv_line(long long k, std::vector<Rat> weights) {
    if (weights.empty())
        throw std::invalid_argument("EquivLine: need at least one weight");
    EquivLine line;
    for (const Rat& w : weights) {
        Rat kw = w * Rat(k);
        if (!kw.is_integer())
            throw std::invalid_argument("EquivLine: k*w_j is not an integer (k=" +
                                        std::to_string(k) + ", w=" + w.str() + ")");
    }
    for (std::size_t j = 1; j < weights.size(); ++j) {
        Rat d = Rat(k) * (weights[j - 1] - weights[j]);
        line.degrees.push_back(d.as_integer());
    }
    line.weights = std::move(weights);
    return line;
}

inline EquivLine zero_line(long long k, int n) {
    return make_equiv_line(k, std::vector<Rat>((std::size_t)n + 1, Rat(0)));
}

// ---------------------------------------------------------------------------
// Equivariant weight models.
//
// "paper": coordinate weights (k/n_l, k/n_l') on the component with labels
// (l, l'), monomial retained iff its total weight is 0 mod k.
// "unit": node-smoothing weights.  The affine coordinate z at the left
// branch carries weight +1 (the right branch carries -1), so the section
// z^a = x_1^a/x_0^a has equivariant weight k*w_{j-1} - a and is invariant
// iff a = k*w_{j-1} (mod k); the equivalent right-chart form is
// d - a = -k*w_j (mod k).  This is the formulation under which a chain and
// its reversal give equal dimensions.
// ---------------------------------------------------------------------------

enum class ModelKind { Paper, Unit };

struct EquivModel {
    ModelKind kind;
    std::string name;
};

inline EquivModel paper_model() { return {ModelKind::Paper, "paper"}; }
inline EquivModel unit_model() { return {ModelKind::Unit, "unit"}; }

inline EquivModel model_by_name(const std::string& name) {
    if (name == "paper")
        return paper_model();
    if (name == "unit")
        return unit_model();
    throw std::invalid_argument("unknown equivariant model '" + name + "'");
}

inline long long mod_k(long long v, long long k) {
    long long m = v % k;
    return m < 0 ? m + k : m;
}

// Exponents a in [0, d] with (d-a) c0 + a c1 = rhs (mod k), ascending;
// empty when d < 0.
inline std::vector<long long> component_sections(long long d, long long c0, long long c1,
                                                 long long k, long long rhs = 0) {
    if (k < 1)
        throw std::invalid_argument("component_sections: k must be >= 1");
    std::vector<long long> out;
    for (long long a = 0; a <= d; ++a)
        if (mod_k((d - a) * c0 + a * c1 - rhs, k) == 0)
            out.push_back(a);
    return out;
}

// Retained exponents on component j (1-based) under the given model.
inline std::vector<long long> retained_exponents(const RootSystem& rs, const TwistedChain& chain,
                                                 const EquivLine& line, const EquivModel& model,
                                                 int j) {
    long long d = line.degrees[(std::size_t)(j - 1)];
    if (d < 0)
        return {};
    long long k = chain.k;
    if (model.kind == ModelKind::Paper) {
        long long nl = rs.mark(chain.labels[(std::size_t)(j - 1)]);
        long long nr = rs.mark(chain.labels[(std::size_t)j]);
        if (k % nl != 0 || k % nr != 0)
            throw std::domain_error("paper model: mark " + std::to_string(nl) + "," +
                                    std::to_string(nr) + " does not divide k=" +
                                    std::to_string(k));
        return component_sections(d, k / nl, k / nr, k);
    }
    long long fiber = mod_k((line.weights[(std::size_t)(j - 1)] * Rat(k)).as_integer(), k);
    return component_sections(d, 0, 1, k, fiber);
}

// ---------------------------------------------------------------------------
// Section spaces
// ---------------------------------------------------------------------------

struct SectionSpace {
    int n = 0;              // number of chain components
    bool fiber_mode = false; // n == 0: the space is the fixed-point fiber
    long long dim = 0;
    std::vector<std::vector<long long>> comp_exponents; // retained exponents per component
    std::vector<std::size_t> var_offset;                // first variable index per component
    std::size_t num_vars = 0;
    RatMat constraints; // rows over the num_vars coefficients
    std::vector<RatVec> basis;

    // Index of the variable for (component j 1-based, exponent a), or npos.
    std::size_t var_index(int j, long long a) const {
        const auto& exps = comp_exponents[(std::size_t)(j - 1)];
        auto it = std::lower_bound(exps.begin(), exps.end(), a);
        if (it == exps.end() || *it != a)
            return (std::size_t)-1;
        return var_offset[(std::size_t)(j - 1)] + (std::size_t)(it - exps.begin());
    }
};

// Value of a section at p_0 and p_n.  Pure extreme monomials have value 1 at
// their fixed point, mixed monomials value 0; a negative-degree component has
// no sections so its endpoint values are 0.
inline Rat value_at_p0(const SectionSpace& s, const EquivLine& line, const RatVec& vec) {
    if (s.fiber_mode)
        return vec.empty() ? Rat(0) : vec[0];
    std::size_t idx = s.var_index(1, 0);
    (void)line;
    return idx == (std::size_t)-1 ? Rat(0) : vec[idx];
}

inline Rat value_at_pn(const SectionSpace& s, const EquivLine& line, const RatVec& vec) {
    if (s.fiber_mode)
        return vec.empty() ? Rat(0) : vec[0];
    long long dn = line.degrees.back();
    if (dn < 0)
        return Rat(0);
    std::size_t idx = s.var_index(s.n, dn);
    return idx == (std::size_t)-1 ? Rat(0) : vec[idx];
}

inline SectionSpace line_h0(const RootSystem& rs, const TwistedChain& chain,
                            const EquivLine& line, const EquivModel& model, bool vanish_p0,
                            bool vanish_pn) {
    if ((int)line.weights.size() != chain.components() + 1)
        throw std::invalid_argument("line_h0: line length does not match chain");
    SectionSpace s;
    s.n = chain.components();
    if (s.n == 0) {
        // Zero-length chain: H^0 is the fiber at the single fixed point.
        // Only a weight-0 fiber contributes an invariant direction.
        s.fiber_mode = true;
        bool alive = line.weights[0].is_zero() && !vanish_p0 && !vanish_pn;
        s.dim = alive ? 1 : 0;
        if (alive)
            s.basis.push_back(RatVec{Rat(1)});
        s.num_vars = alive ? 1 : 0;
        return s;
    }

    for (int j = 1; j <= s.n; ++j) {
        s.var_offset.push_back(s.num_vars);
        s.comp_exponents.push_back(retained_exponents(rs, chain, line, model, j));
        s.num_vars += s.comp_exponents.back().size();
    }

    auto right_var = [&](int j) { // variable carrying the value at p_j from the left
        long long d = line.degrees[(std::size_t)(j - 1)];
        return d < 0 ? (std::size_t)-1 : s.var_index(j, d);
    };
    auto left_var = [&](int j) { // variable carrying the value at p_{j-1}
        long long d = line.degrees[(std::size_t)(j - 1)];
        return d < 0 ? (std::size_t)-1 : s.var_index(j, 0);
    };

    auto add_row = [&](std::size_t a, Rat ca, std::size_t b, Rat cb) {
        RatVec row(s.num_vars, Rat(0));
        bool nonzero = false;
        if (a != (std::size_t)-1) {
            row[a] += ca;
            nonzero = true;
        }
        if (b != (std::size_t)-1) {
            row[b] += cb;
            nonzero = true;
        }
        if (nonzero)
            s.constraints.push_back(std::move(row));
    };

    for (int j = 1; j < s.n; ++j) // value matching at the internal node p_j
        add_row(right_var(j), Rat(1), left_var(j + 1), Rat(-1));
    if (vanish_p0)
        add_row(left_var(1), Rat(1), (std::size_t)-1, Rat(0));
    if (vanish_pn)
        add_row(right_var(s.n), Rat(1), (std::size_t)-1, Rat(0));

    s.basis = rat_nullspace(s.constraints, s.num_vars);
    s.dim = (long long)s.basis.size();
    return s;
}

// ---------------------------------------------------------------------------
// ad E and its invariants
// ---------------------------------------------------------------------------

struct AdDecomposition {
    std::vector<std::pair<Root, EquivLine>> root_lines; // one line per root, sorted
    int trivial_count;                                  // r torus summands
};

inline AdDecomposition ad_decomposition(const RootSystem& rs, const TwistedChain& chain) {
    AdDecomposition ad;
    ad.trivial_count = rs.rank;
    std::vector<Coweight> v = alcove_vertices(rs);
    for (const Root& a : rs.all_roots()) {
        std::vector<Rat> w;
        w.reserve(chain.labels.size());
        for (int lab : chain.labels)
            w.push_back(pairing(a, v[(std::size_t)lab], rs));
        EquivLine line = make_equiv_line(chain.k, std::move(w));
        for (long long d : line.degrees)
            if (d > chain.k || d < -chain.k)
                throw std::logic_error("ad_decomposition: degree bound |d| <= k violated");
        ad.root_lines.emplace_back(a, std::move(line));
    }
    return ad;
}

struct ChainH0 {
    long long total = 0;
    long long trivial_each = 0; // contribution of one torus summand
    struct PerRoot {
        Root root;
        EquivLine line;
        long long dim;
    };
    std::vector<PerRoot> per_root;
};

inline ChainH0 chain_h0_adE(const RootSystem& rs, const TwistedChain& chain,
                            const EquivModel& model, bool vanish) {
    ChainH0 out;
    EquivLine triv = zero_line(chain.k, chain.components());
    out.trivial_each = line_h0(rs, chain, triv, model, vanish, vanish).dim;
    out.total = out.trivial_each * rs.rank;
    for (auto& [root, line] : ad_decomposition(rs, chain).root_lines) {
        long long d = line_h0(rs, chain, line, model, vanish, vanish).dim;
        out.per_root.push_back({root, line, d});
        out.total += d;
    }
    return out;
}

// Evaluation of the untwisted H^0(ad E) basis at (p_0, p_n), as a matrix in
// g + g coordinates: two columns per summand (r torus summands first, then
// one per root), one row per basis section.
struct EvData {
    long long total_dim = 0;
    long long rank = 0;
    long long kernel_dim = 0;
    bool injective = false;
    RatMat matrix;
};

inline EvData ev_map(const RootSystem& rs, const TwistedChain& chain, const EquivModel& model) {
    EvData ev;
    AdDecomposition ad = ad_decomposition(rs, chain);
    std::size_t summands = (std::size_t)ad.trivial_count + ad.root_lines.size();
    std::size_t cols = 2 * summands;

    std::size_t summand_idx = 0;
    auto add_summand = [&](const EquivLine& line) {
        SectionSpace s = line_h0(rs, chain, line, model, false, false);
        for (const RatVec& b : s.basis) {
            RatVec row(cols, Rat(0));
            row[2 * summand_idx] = value_at_p0(s, line, b);
            row[2 * summand_idx + 1] = value_at_pn(s, line, b);
            ev.matrix.push_back(std::move(row));
        }
        ev.total_dim += s.dim;
        ++summand_idx;
    };

    EquivLine triv = zero_line(chain.k, chain.components());
    for (int t = 0; t < ad.trivial_count; ++t)
        add_summand(triv);
    for (auto& [root, line] : ad.root_lines)
        add_summand(line);

    ev.rank = (long long)rat_rank(ev.matrix);
    ev.kernel_dim = ev.total_dim - ev.rank;
    ev.injective = ev.kernel_dim == 0;
    return ev;
}

// ---------------------------------------------------------------------------
// The two dimension formulas for the chain automorphism group, computed side
// by side and never merged: the group-theoretic formula
// dim L + dim Z + 2 dim U and the constructive count dim L + n lifted tori
// + endpoint root sections.  They can disagree; reports carry both.
// ---------------------------------------------------------------------------

struct FormulaDims {
    long long statement_dim;    // dim_L + dim_Z + 2 dim_U
    long long constructive_dim; // dim_L + n + count_neg + count_pos
    long long dim_l, dim_z, dim_u;
    long long n_components;
    long long count_neg, count_pos;
};

inline FormulaDims formula_dims(const RootSystem& rs, const TwistedChain& chain) {
    FaceLabel I = FaceLabel::make(chain.labels, rs.rank);
    FiniteLeviData fld = finite_levi_data(rs, I);
    std::vector<Coweight> v = alcove_vertices(rs);
    const Coweight& left = v[(std::size_t)chain.labels.front()];
    const Coweight& right = v[(std::size_t)chain.labels.back()];

    long long neg = 0, pos = 0;
    for (const Root& a : rs.positive_roots) {
        Root na = a.negated();
        if (pairing(na, left, rs).is_zero()) {
            bool drops = false;
            for (int lab : chain.labels)
                if (pairing(na, v[(std::size_t)lab], rs).sign() < 0)
                    drops = true;
            if (drops)
                ++neg;
        }
        if (pairing(a, right, rs).is_zero()) {
            bool rises = false;
            for (int lab : chain.labels)
                if (pairing(a, v[(std::size_t)lab], rs).sign() > 0)
                    rises = true;
            if (rises)
                ++pos;
        }
    }

    FormulaDims fd{};
    fd.dim_l = fld.dim_l;
    fd.dim_z = fld.dim_z;
    fd.dim_u = fld.dim_u;
    fd.n_components = chain.components();
    fd.count_neg = neg;
    fd.count_pos = pos;
    fd.statement_dim = fld.dim_l + fld.dim_z + 2 * fld.dim_u;
    fd.constructive_dim = fld.dim_l + fd.n_components + neg + pos;
    return fd;
}

// ---------------------------------------------------------------------------
// Vanishing verdicts
// ---------------------------------------------------------------------------

struct SectionWitness {
    Root root;
    // (component, exponent, coefficient) triples of a nonzero twisted section
    struct Term {
        int component;
        long long exponent;
        std::string coeff;
    };
    std::vector<Term> terms;
};

struct VanishingVerdict {
    bool vanishes = true;
    long long twisted_total = 0;
    std::optional<SectionWitness> witness;
};

inline VanishingVerdict verify_vanishing(const RootSystem& rs, const TwistedChain& chain,
                                         const EquivModel& model) {
    VanishingVerdict out;
    ChainH0 twisted = chain_h0_adE(rs, chain, model, true);
    out.twisted_total = twisted.total;
    out.vanishes = twisted.total == 0;
    if (out.vanishes)
        return out;
    for (const auto& pr : twisted.per_root) {
        if (pr.dim == 0)
            continue;
        SectionSpace s = line_h0(rs, chain, pr.line, model, true, true);
        SectionWitness w{pr.root, {}};
        const RatVec& b = s.basis.front();
        for (int j = 1; j <= s.n; ++j) {
            const auto& exps = s.comp_exponents[(std::size_t)(j - 1)];
            for (std::size_t t = 0; t < exps.size(); ++t) {
                const Rat& c = b[s.var_offset[(std::size_t)(j - 1)] + t];
                if (!c.is_zero())
                    w.terms.push_back({j, exps[t], c.str()});
            }
        }
        out.witness = std::move(w);
        return out;
    }
    // Twisted sections came from torus summands only (cannot happen: a
    // constant vanishing at an endpoint is zero), but keep the verdict honest.
    out.witness = SectionWitness{Root::make({1}), {}};
    return out;
}

// ---------------------------------------------------------------------------
// One full record per configuration; this is the unit of the audit reports.
// ---------------------------------------------------------------------------

struct ChainRecord {
    LieType type;
    long long k;
    std::vector<int> labels;
    std::string model;
    bool contains_label_zero;
    struct PerRoot {
        Root root;
        std::vector<long long> degrees;
        long long dim_untwisted;
        long long dim_twisted;
    };
    std::vector<PerRoot> per_root;
    long long total_untwisted;
    long long total_twisted;
    long long statement_dim;
    long long constructive_dim;
    long long ev_rank;
    bool ev_injective;
    std::optional<SectionWitness> witness;
};

inline ChainRecord make_chain_record(const RootSystem& rs, const TwistedChain& chain,
                                     const EquivModel& model) {
    ChainRecord rec;
    rec.type = rs.type;
    rec.k = chain.k;
    rec.labels = chain.labels;
    rec.model = model.name;
    rec.contains_label_zero =
        std::find(chain.labels.begin(), chain.labels.end(), 0) != chain.labels.end();

    ChainH0 untw = chain_h0_adE(rs, chain, model, false);
    ChainH0 tw = chain_h0_adE(rs, chain, model, true);
    for (std::size_t i = 0; i < untw.per_root.size(); ++i)
        rec.per_root.push_back({untw.per_root[i].root, untw.per_root[i].line.degrees,
                                untw.per_root[i].dim, tw.per_root[i].dim});
    rec.total_untwisted = untw.total;
    rec.total_twisted = tw.total;

    FormulaDims fd = formula_dims(rs, chain);
    rec.statement_dim = fd.statement_dim;
    rec.constructive_dim = fd.constructive_dim;

    EvData ev = ev_map(rs, chain, model);
    rec.ev_rank = ev.rank;
    rec.ev_injective = ev.injective;

    VanishingVerdict vv = verify_vanishing(rs, chain, model);
    rec.witness = vv.witness;
    return rec;
}

} // namespace alckit
