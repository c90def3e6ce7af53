#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "plumbing/feasibility.hpp"
#include "plumbing/graph.hpp"
#include "plumbing/linalg.hpp"

namespace plumbing {

// Exactness of the symplectic class on the plumbing boundary is equivalent to
// solvability of Q z = a; the lifts are exactly the solutions.
inline SolutionSet exact_on_boundary(const AugmentedGraph& ag) {
    return solve(intersection_matrix(ag.graph).entries, ag.area_vector());
}

// Wrapping numbers are minus the lift.
inline RatVec wrapping_numbers(const RatVec& z) {
    RatVec out;
    out.reserve(z.size());
    for (const Rat& zi : z) out.push_back(-zi);
    return out;
}

namespace detail {

// Decides whether some member z0 + V t of an affine family satisfies the given
// orthant condition, strictly positive (z > 0) or non-strictly non-positive
// (z <= 0), and returns such a member.
inline std::optional<RatVec> orthant_member(const SolutionSet& sol, bool positive) {
    if (sol.empty()) return std::nullopt;
    const std::size_t k = sol.particular.size();
    if (sol.kind == SolutionSet::Kind::Unique) {
        for (const Rat& zi : sol.particular) {
            if (positive ? (zi <= 0) : (zi > 0)) return std::nullopt;
        }
        return sol.particular;
    }
    const std::size_t d = sol.kernel.size();
    std::vector<LinearConstraint> cons(k);
    for (std::size_t i = 0; i < k; ++i) {
        cons[i].coeff.assign(d, Rat(0));
        for (std::size_t j = 0; j < d; ++j)
            cons[i].coeff[j] = positive ? sol.kernel[j][i] : -sol.kernel[j][i];
        cons[i].constant = positive ? sol.particular[i] : -sol.particular[i];
        cons[i].strict = positive;
    }
    auto t = find_feasible_point(d, std::move(cons));
    if (!t) return std::nullopt;
    RatVec z = sol.particular;
    for (std::size_t j = 0; j < d; ++j)
        for (std::size_t i = 0; i < k; ++i) z[i] += (*t)[j] * sol.kernel[j][i];
    return z;
}

}  // namespace detail

// Positive GS criterion: a lift z with Q z = a and every z_i > 0. The
// negative criterion asks for z in the closed orthant (-inf, 0]^k instead;
// the asymmetry (open vs closed) follows the definition.
inline std::optional<RatVec> positive_gs(const AugmentedGraph& ag) {
    return detail::orthant_member(exact_on_boundary(ag), true);
}

inline std::optional<RatVec> negative_gs(const AugmentedGraph& ag) {
    return detail::orthant_member(exact_on_boundary(ag), false);
}

// Constructive witness for the trichotomy: a symmetric matrix with
// non-negative off-diagonal entries that is not negative definite and has a
// strictly positive vector in its image admits z > 0 with Qz > 0.
//
// The induction eliminates a row with negative diagonal via the congruence
// with multipliers l_j = -q_kj/q_kk, recurses, and back-substitutes y_k just
// below sum(l_j y_j), halving the gap until Qy is entrywise positive.
namespace detail {

inline std::optional<RatVec> trichotomy_rec(const RatMat& m, Errc& err) {
    const std::size_t k = m.size();
    if (k == 0) return RatVec{};

    std::size_t r = k;
    for (std::size_t i = k; i-- > 0;) {
        if (m[i][i] < 0) {
            r = i;
            break;
        }
    }
    if (r == k) {
        // all diagonals >= 0, hence all entries >= 0; a zero row certifies
        // that no strictly positive vector lies in the image
        for (std::size_t i = 0; i < k; ++i) {
            bool all_zero = true;
            for (std::size_t j = 0; j < k; ++j)
                if (m[i][j] != 0) all_zero = false;
            if (all_zero) {
                err = Errc::NoPositiveImage;
                return std::nullopt;
            }
        }
        return RatVec(k, Rat(1));
    }

    RatMat reduced(k - 1, RatVec(k - 1));
    for (std::size_t i = 0, ri = 0; i < k; ++i) {
        if (i == r) continue;
        for (std::size_t j = 0, rj = 0; j < k; ++j) {
            if (j == r) continue;
            reduced[ri][rj] = m[i][j] - m[i][r] * m[r][j] / m[r][r];
            ++rj;
        }
        ++ri;
    }
    auto sub = trichotomy_rec(reduced, err);
    if (!sub) return std::nullopt;

    Rat s(0);  // sum of l_j y_j with l_j = -q_rj/q_rr >= 0
    for (std::size_t j = 0, rj = 0; j < k; ++j) {
        if (j == r) continue;
        s += (-m[r][j] / m[r][r]) * (*sub)[rj];
        ++rj;
    }
    if (s == 0) {
        // the row splits off as a 1x1 negative definite direct summand, so no
        // witness can exist
        err = Errc::NegativeDefinite;
        return std::nullopt;
    }

    RatVec y(k);
    for (std::size_t j = 0, rj = 0; j < k; ++j) {
        if (j == r) continue;
        y[j] = (*sub)[rj];
        ++rj;
    }
    Rat eps(1);
    for (;;) {
        y[r] = s - eps;
        if (y[r] > 0) {
            bool ok = true;
            for (std::size_t i = 0; i < k && ok; ++i) {
                Rat img(0);
                for (std::size_t j = 0; j < k; ++j) img += m[i][j] * y[j];
                if (img <= 0) ok = false;
            }
            if (ok) return y;
        }
        eps /= 2;
    }
}

}  // namespace detail

inline RatVec trichotomy_witness(const IntMat& q) {
    if (!is_symmetric(q)) fail(Errc::InvalidParameter, "trichotomy_witness: matrix must be symmetric");
    const std::size_t k = q.size();
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j)
            if (i != j && q[i][j] < 0)
                fail(Errc::InvalidParameter, "trichotomy_witness: off-diagonal entries must be non-negative");
    if (is_negative_definite(q)) fail(Errc::NegativeDefinite, "trichotomy_witness");

    RatMat m(k, RatVec(k));
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j) m[i][j] = Rat(q[i][j]);
    Errc err = Errc::NoPositiveImage;
    auto z = detail::trichotomy_rec(m, err);
    if (!z) fail(err, "trichotomy_witness");
    return *z;
}

inline RatVec trichotomy_witness(const IntersectionMatrix& q) { return trichotomy_witness(q.entries); }

// Flowchart outcome for an augmented graph.
struct FlowchartVerdict {
    enum class Kind { NotExactOnBoundary, ConvexNegativeDefinite, Concave, DeformableToConcave };
    Kind kind = Kind::NotExactOnBoundary;
    RatVec witness;      // Concave: positive lift; DeformableToConcave: trichotomy witness
    RatVec target_area;  // DeformableToConcave: Q . witness, entrywise positive
};

inline FlowchartVerdict classify_flowchart(const AugmentedGraph& ag) {
    FlowchartVerdict out;
    IntMat q = intersection_matrix(ag.graph).entries;
    SolutionSet sol = solve(q, ag.area_vector());
    if (sol.empty()) {
        out.kind = FlowchartVerdict::Kind::NotExactOnBoundary;
        return out;
    }
    if (is_negative_definite(q)) {
        out.kind = FlowchartVerdict::Kind::ConvexNegativeDefinite;
        return out;
    }
    if (auto z = detail::orthant_member(sol, true)) {
        out.kind = FlowchartVerdict::Kind::Concave;
        out.witness = *z;
        return out;
    }
    out.kind = FlowchartVerdict::Kind::DeformableToConcave;
    out.witness = trichotomy_witness(q);
    out.target_area = mat_apply(q, out.witness);
    return out;
}

// Piecewise linear inflation path from a lift z to a scaled trichotomy
// witness, moving one coordinate at a time, strictly increasing, with every
// waypoint past the start having strictly positive image under Q.
struct InflationPath {
    std::vector<RatVec> waypoints;
};

inline InflationPath plan_inflation_path(const AugmentedGraph& ag) {
    IntMat q = intersection_matrix(ag.graph).entries;
    SolutionSet sol = solve(q, ag.area_vector());
    if (sol.empty()) fail(Errc::NotExactOnBoundary, "plan_inflation_path needs a lift");
    const RatVec z = sol.particular;
    const RatVec zbar = trichotomy_witness(q);
    const std::size_t k = z.size();

    // scale so that c * zbar > z entrywise
    Rat c(1);
    for (std::size_t i = 0; i < k; ++i) {
        Rat need = z[i] / zbar[i] + 1;
        if (need > c) c = need;
    }
    RatVec target(k);
    for (std::size_t i = 0; i < k; ++i) target[i] = c * zbar[i];

    // round-robin staircase with dyadic refinement; positivity of Q on the
    // straight segment is uniform, so fine enough steps succeed
    for (int level = 0;; ++level) {
        const std::size_t steps = std::size_t(1) << level;
        InflationPath path;
        path.waypoints.push_back(z);
        RatVec cur = z;
        bool ok = true;
        for (std::size_t s = 0; s < steps && ok; ++s) {
            for (std::size_t j = 0; j < k && ok; ++j) {
                cur[j] += (target[j] - z[j]) / Rat(steps);
                for (const Rat& img : mat_apply(q, cur))
                    if (img <= 0) {
                        ok = false;
                        break;
                    }
                if (ok) path.waypoints.push_back(cur);
            }
        }
        if (ok) return path;
    }
}

}  // namespace plumbing
