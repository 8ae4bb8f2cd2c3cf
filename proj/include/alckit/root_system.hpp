#pragma once

#include <algorithm>
#include <cctype>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "alckit/matrix.hpp"
#include "alckit/rational.hpp"

namespace alckit {

// ---------------------------------------------------------------------------
// Lie type
// ---------------------------------------------------------------------------

enum class Series : char { A = 'A', B = 'B', C = 'C', D = 'D', E = 'E', F = 'F', G = 'G' };

// Simple type in Bourbaki numbering.  Rank bounds: A r>=1, B r>=2, C r>=3,
// D r>=4, E r in {6,7,8}, F r=4, G r=2.
struct LieType {
    Series series;
    int rank;

    static LieType make(Series s, int r) {
        bool ok = false;
        switch (s) {
        case Series::A: ok = r >= 1; break;
        case Series::B: ok = r >= 2; break;
        case Series::C: ok = r >= 3; break;
        case Series::D: ok = r >= 4; break;
        case Series::E: ok = r == 6 || r == 7 || r == 8; break;
        case Series::F: ok = r == 4; break;
        case Series::G: ok = r == 2; break;
        }
        if (!ok)
            throw std::invalid_argument("invalid Lie type " + std::string(1, char(s)) +
                                        std::to_string(r));
        return LieType{s, r};
    }

    // Parses strings like "A2", "E8", "g2".
    static LieType parse(const std::string& text) {
        if (text.size() < 2)
            throw std::invalid_argument("cannot parse Lie type '" + text + "'");
        char c = (char)std::toupper((unsigned char)text[0]);
        if (c < 'A' || c > 'G')
            throw std::invalid_argument("cannot parse Lie type '" + text + "'");
        int r = 0;
        for (std::size_t i = 1; i < text.size(); ++i) {
            if (!std::isdigit((unsigned char)text[i]))
                throw std::invalid_argument("cannot parse Lie type '" + text + "'");
            r = r * 10 + (text[i] - '0');
            if (r > 1000)
                throw std::invalid_argument("rank out of range in '" + text + "'");
        }
        return make(Series(c), r);
    }

    std::string name() const { return std::string(1, char(series)) + std::to_string(rank); }

    friend bool operator==(const LieType& a, const LieType& b) {
        return a.series == b.series && a.rank == b.rank;
    }
};

// All valid types of rank <= max_rank, in (rank, series) order.
inline std::vector<LieType> all_types_up_to_rank(int max_rank) {
    std::vector<LieType> out;
    for (int r = 1; r <= max_rank; ++r)
        for (char c : {'A', 'B', 'C', 'D', 'E', 'F', 'G'}) {
            try {
                out.push_back(LieType::make(Series(c), r));
            } catch (const std::invalid_argument&) {
            }
        }
    return out;
}

// ---------------------------------------------------------------------------
// Roots and coweights
// ---------------------------------------------------------------------------

// A root stored by its integer coefficients in the simple-root basis.
// Coefficients are uniformly >= 0 or uniformly <= 0 and not all zero.
struct Root {
    std::vector<long long> coeffs;

    static Root make(std::vector<long long> c) {
        bool has_pos = false, has_neg = false, nonzero = false;
        for (long long v : c) {
            if (v > 0) has_pos = true;
            if (v < 0) has_neg = true;
            if (v != 0) nonzero = true;
        }
        if (!nonzero)
            throw std::invalid_argument("Root: zero vector is not a root");
        if (has_pos && has_neg)
            throw std::invalid_argument("Root: mixed-sign coefficients");
        return Root{std::move(c)};
    }

    bool positive() const {
        for (long long v : coeffs)
            if (v != 0)
                return v > 0;
        return false;
    }

    Root negated() const {
        std::vector<long long> c(coeffs);
        for (auto& v : c)
            v = -v;
        return Root{std::move(c)};
    }

    long long height() const {
        long long h = 0;
        for (long long v : coeffs)
            h += v;
        return h;
    }

    friend bool operator==(const Root& a, const Root& b) { return a.coeffs == b.coeffs; }
    friend bool operator<(const Root& a, const Root& b) { return a.coeffs < b.coeffs; }

    std::string str() const {
        std::string s = "(";
        for (std::size_t i = 0; i < coeffs.size(); ++i) {
            if (i) s += ",";
            s += std::to_string(coeffs[i]);
        }
        return s + ")";
    }
};

// A rational co-character, stored in the coroot basis {alpha_1^v, ..., alpha_r^v}.
struct Coweight {
    std::vector<Rat> coeffs;

    static Coweight zero(int rank) { return Coweight{std::vector<Rat>((std::size_t)rank, Rat(0))}; }

    bool is_zero() const {
        for (const Rat& c : coeffs)
            if (!c.is_zero())
                return false;
        return true;
    }

    bool is_integral() const {
        for (const Rat& c : coeffs)
            if (!c.is_integer())
                return false;
        return true;
    }

    // Least m >= 1 with m * this integral.
    long long denominator_lcm() const {
        long long l = 1;
        for (const Rat& c : coeffs)
            l = lcm_ll(l, c.den());
        return l;
    }

    Coweight scaled(const Rat& f) const {
        Coweight w = *this;
        for (Rat& c : w.coeffs)
            c *= f;
        return w;
    }

    friend Coweight operator+(const Coweight& a, const Coweight& b) {
        if (a.coeffs.size() != b.coeffs.size())
            throw std::invalid_argument("Coweight: dimension mismatch");
        Coweight w = a;
        for (std::size_t i = 0; i < w.coeffs.size(); ++i)
            w.coeffs[i] += b.coeffs[i];
        return w;
    }
    friend Coweight operator-(const Coweight& a, const Coweight& b) {
        return a + b.scaled(Rat(-1));
    }
    friend bool operator==(const Coweight& a, const Coweight& b) { return a.coeffs == b.coeffs; }

    std::string str() const {
        std::string s = "(";
        for (std::size_t i = 0; i < coeffs.size(); ++i) {
            if (i) s += ",";
            s += coeffs[i].str();
        }
        return s + ")";
    }
};

// ---------------------------------------------------------------------------
// Root system
// ---------------------------------------------------------------------------

// Cartan convention, fixed once for the whole library:
//   cartan[i][j] = <alpha_j, alpha_i^v>   (value of root j on coroot i).
// Rows are indexed by coroots, so the -2/-3 entries sit in the rows of the
// short simple roots.
struct RootSystem {
    LieType type;
    int rank;
    std::vector<std::vector<long long>> cartan;
    RatMat inv_cartan;
    std::vector<Root> positive_roots; // sorted by coefficient vector
    Root highest_root;
    std::vector<long long> marks;      // n_1..n_r, theta = sum n_i alpha_i
    std::vector<long long> dual_marks; // theta^v = sum n_i^v alpha_i^v
    std::vector<Rat> symmetrizer;      // d_i with d_i * cartan[i][j] symmetric

    long long mark(int i) const { // n_0 = 1 by convention
        if (i == 0)
            return 1;
        return marks[(std::size_t)i - 1];
    }

    std::vector<Root> all_roots() const {
        std::vector<Root> out;
        out.reserve(positive_roots.size() * 2);
        for (const Root& a : positive_roots)
            out.push_back(a.negated());
        for (const Root& a : positive_roots)
            out.push_back(a);
        std::sort(out.begin(), out.end());
        return out;
    }

    Coweight coroot_of(const Root& a) const {
        // beta^v = sum_j m_j (d_j / d_beta) alpha_j^v, d_beta = (beta,beta)/2
        Rat norm(0);
        for (int i = 0; i < rank; ++i)
            for (int j = 0; j < rank; ++j)
                norm += Rat(a.coeffs[(std::size_t)i]) * Rat(a.coeffs[(std::size_t)j]) *
                        symmetrizer[(std::size_t)i] * Rat(cartan[(std::size_t)i][(std::size_t)j]);
        Rat d_beta = norm / Rat(2);
        Coweight w = Coweight::zero(rank);
        for (int j = 0; j < rank; ++j)
            w.coeffs[(std::size_t)j] = Rat(a.coeffs[(std::size_t)j]) * symmetrizer[(std::size_t)j] / d_beta;
        return w;
    }

    Coweight theta_coroot() const {
        Coweight w = Coweight::zero(rank);
        for (int j = 0; j < rank; ++j)
            w.coeffs[(std::size_t)j] = Rat(dual_marks[(std::size_t)j]);
        return w;
    }
};

// <alpha, eta> computed through the Cartan matrix; bilinear in both slots.
inline Rat pairing(const Root& alpha, const Coweight& eta, const RootSystem& rs) {
    if ((int)alpha.coeffs.size() != rs.rank || (int)eta.coeffs.size() != rs.rank)
        throw std::invalid_argument("pairing: dimension mismatch");
    Rat acc(0);
    for (int i = 0; i < rs.rank; ++i) {
        if (eta.coeffs[(std::size_t)i].is_zero())
            continue;
        long long row = 0;
        for (int j = 0; j < rs.rank; ++j)
            row += alpha.coeffs[(std::size_t)j] * rs.cartan[(std::size_t)i][(std::size_t)j];
        acc += eta.coeffs[(std::size_t)i] * Rat(row);
    }
    return acc;
}

namespace detail {

inline std::vector<std::vector<long long>> cartan_matrix(const LieType& t) {
    int r = t.rank;
    std::vector<std::vector<long long>> c((std::size_t)r, std::vector<long long>((std::size_t)r, 0));
    for (int i = 0; i < r; ++i)
        c[(std::size_t)i][(std::size_t)i] = 2;
    auto link = [&](int i, int j, long long cij, long long cji) {
        c[(std::size_t)(i - 1)][(std::size_t)(j - 1)] = cij;
        c[(std::size_t)(j - 1)][(std::size_t)(i - 1)] = cji;
    };
    auto chain = [&](int from, int to) {
        for (int i = from; i < to; ++i)
            link(i, i + 1, -1, -1);
    };
    switch (t.series) {
    case Series::A:
        chain(1, r);
        break;
    case Series::B: // alpha_r short
        chain(1, r - 1);
        link(r - 1, r, -1, -2);
        break;
    case Series::C: // alpha_r long
        chain(1, r - 1);
        link(r - 1, r, -2, -1);
        break;
    case Series::D:
        chain(1, r - 1);
        link(r - 2, r, -1, -1);
        break;
    case Series::E: // 1-3-4-5-...-r chain, 2 attached to 4
        link(1, 3, -1, -1);
        chain(3, r);
        link(2, 4, -1, -1);
        break;
    case Series::F: // alpha_1, alpha_2 long
        link(1, 2, -1, -1);
        link(2, 3, -1, -2);
        link(3, 4, -1, -1);
        break;
    case Series::G: // alpha_1 short
        link(1, 2, -3, -1);
        break;
    }
    return c;
}

// Standard closure algorithm: grow positive roots by height, adding
// beta + alpha_i whenever the alpha_i-string through beta allows it.
inline std::vector<Root> closure_positive_roots(const std::vector<std::vector<long long>>& cartan) {
    int r = (int)cartan.size();
    std::set<std::vector<long long>> known;
    std::vector<std::vector<long long>> frontier;
    for (int i = 0; i < r; ++i) {
        std::vector<long long> e((std::size_t)r, 0);
        e[(std::size_t)i] = 1;
        known.insert(e);
        frontier.push_back(e);
    }
    while (!frontier.empty()) {
        std::vector<std::vector<long long>> next;
        for (const auto& beta : frontier) {
            for (int i = 0; i < r; ++i) {
                // p = how far the string extends downward from beta
                long long p = 0;
                std::vector<long long> down = beta;
                for (;;) {
                    down[(std::size_t)i] -= 1;
                    bool zero = std::all_of(down.begin(), down.end(),
                                            [](long long v) { return v == 0; });
                    if (zero || !known.count(down))
                        break;
                    ++p;
                }
                long long pair = 0; // <beta, alpha_i^v>
                for (int j = 0; j < r; ++j)
                    pair += beta[(std::size_t)j] * cartan[(std::size_t)i][(std::size_t)j];
                if (p - pair >= 1) {
                    std::vector<long long> up = beta;
                    up[(std::size_t)i] += 1;
                    if (known.insert(up).second)
                        next.push_back(up);
                }
            }
        }
        frontier = std::move(next);
    }
    std::vector<Root> roots;
    roots.reserve(known.size());
    for (const auto& c : known)
        roots.push_back(Root{c});
    std::sort(roots.begin(), roots.end());
    return roots;
}

inline std::vector<Rat> symmetrizer_of(const std::vector<std::vector<long long>>& cartan) {
    int r = (int)cartan.size();
    std::vector<Rat> d((std::size_t)r, Rat(0));
    std::vector<bool> done((std::size_t)r, false);
    d[0] = Rat(1);
    done[0] = true;
    for (bool progress = true; progress;) {
        progress = false;
        for (int i = 0; i < r; ++i) {
            if (!done[(std::size_t)i])
                continue;
            for (int j = 0; j < r; ++j) {
                if (done[(std::size_t)j] || cartan[(std::size_t)i][(std::size_t)j] == 0)
                    continue;
                // d_i c_ij = d_j c_ji
                d[(std::size_t)j] = d[(std::size_t)i] * Rat(cartan[(std::size_t)i][(std::size_t)j]) /
                                    Rat(cartan[(std::size_t)j][(std::size_t)i]);
                done[(std::size_t)j] = true;
                progress = true;
            }
        }
    }
    for (bool v : done)
        if (!v)
            throw std::logic_error("symmetrizer: disconnected Dynkin diagram");
    return d;
}

} // namespace detail

inline RootSystem build_root_system(const LieType& t) {
    RootSystem rs;
    rs.type = t;
    rs.rank = t.rank;
    rs.cartan = detail::cartan_matrix(t);
    RatMat cm((std::size_t)t.rank, RatVec((std::size_t)t.rank, Rat(0)));
    for (int i = 0; i < t.rank; ++i)
        for (int j = 0; j < t.rank; ++j)
            cm[(std::size_t)i][(std::size_t)j] = Rat(rs.cartan[(std::size_t)i][(std::size_t)j]);
    rs.inv_cartan = rat_inverse(cm);
    rs.positive_roots = detail::closure_positive_roots(rs.cartan);

    // highest root: the unique positive root dominating all others
    // coefficient-wise.
    std::optional<Root> top;
    for (const Root& a : rs.positive_roots) {
        bool dominates = true;
        for (const Root& b : rs.positive_roots) {
            for (int j = 0; j < t.rank; ++j)
                if (a.coeffs[(std::size_t)j] < b.coeffs[(std::size_t)j]) {
                    dominates = false;
                    break;
                }
            if (!dominates)
                break;
        }
        if (dominates) {
            top = a;
            break;
        }
    }
    if (!top)
        throw std::logic_error("build_root_system: no dominating root found");
    rs.highest_root = *top;
    rs.marks = top->coeffs;

    rs.symmetrizer = detail::symmetrizer_of(rs.cartan);
    Coweight tc = rs.coroot_of(rs.highest_root);
    rs.dual_marks.resize((std::size_t)t.rank);
    for (int j = 0; j < t.rank; ++j) {
        if (!tc.coeffs[(std::size_t)j].is_integer())
            throw std::logic_error("build_root_system: non-integral dual mark");
        rs.dual_marks[(std::size_t)j] = tc.coeffs[(std::size_t)j].as_integer();
    }
    return rs;
}

// omega_1^v..omega_r^v with <alpha_i, omega_j^v> = delta_ij; the j-th row of
// the inverse Cartan matrix in the coroot basis.
inline std::vector<Coweight> fundamental_coweights(const RootSystem& rs) {
    std::vector<Coweight> out;
    out.reserve((std::size_t)rs.rank);
    for (int j = 0; j < rs.rank; ++j) {
        Coweight w = Coweight::zero(rs.rank);
        for (int i = 0; i < rs.rank; ++i)
            w.coeffs[(std::size_t)i] = rs.inv_cartan[(std::size_t)j][(std::size_t)i];
        out.push_back(std::move(w));
    }
    return out;
}

// Canonical deterministic dump used by golden tests.
inline std::string canonical_text(const RootSystem& rs) {
    std::ostringstream os;
    os << "type " << rs.type.name() << "\n";
    os << "cartan";
    for (int i = 0; i < rs.rank; ++i) {
        os << " [";
        for (int j = 0; j < rs.rank; ++j)
            os << (j ? "," : "") << rs.cartan[(std::size_t)i][(std::size_t)j];
        os << "]";
    }
    os << "\n";
    os << "positive";
    for (const Root& a : rs.positive_roots)
        os << " " << a.str();
    os << "\n";
    os << "highest " << rs.highest_root.str() << "\n";
    os << "marks";
    for (long long n : rs.marks)
        os << " " << n;
    os << "\n";
    os << "dual_marks";
    for (long long n : rs.dual_marks)
        os << " " << n;
    os << "\n";
    return os.str();
}

} // namespace alckit
