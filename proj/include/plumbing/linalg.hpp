#pragma once

#include <algorithm>
#include <cstddef>
#include <numeric>
#include <utility>
#include <vector>

#include "plumbing/error.hpp"
#include "plumbing/rational.hpp"

namespace plumbing {

using IntMat = std::vector<std::vector<Int>>;
using RatMat = std::vector<std::vector<Rat>>;

inline std::size_t rows(const IntMat& m) { return m.size(); }

inline bool is_symmetric(const IntMat& q) {
    const std::size_t k = q.size();
    for (std::size_t i = 0; i < k; ++i) {
        if (q[i].size() != k) return false;
        for (std::size_t j = i + 1; j < k; ++j)
            if (q[i][j] != q[j][i]) return false;
    }
    return true;
}

inline RatVec mat_apply(const IntMat& q, const RatVec& z) {
    RatVec out(q.size(), Rat(0));
    for (std::size_t i = 0; i < q.size(); ++i)
        for (std::size_t j = 0; j < z.size(); ++j)
            if (q[i][j] != 0) out[i] += Rat(q[i][j]) * z[j];
    return out;
}

// Fraction-free Bareiss elimination. Intermediate entries stay integral and
// are exactly the minors of the input, which keeps growth polynomial.
inline Int determinant(IntMat m) {
    const std::size_t k = m.size();
    if (k == 0) return Int(1);
    Int sign = 1;
    Int prev = 1;
    for (std::size_t t = 0; t + 1 < k; ++t) {
        if (m[t][t] == 0) {
            std::size_t swap_row = t + 1;
            while (swap_row < k && m[swap_row][t] == 0) ++swap_row;
            if (swap_row == k) return Int(0);
            std::swap(m[t], m[swap_row]);
            sign = -sign;
        }
        for (std::size_t i = t + 1; i < k; ++i) {
            for (std::size_t j = t + 1; j < k; ++j) {
                m[i][j] = (m[t][t] * m[i][j] - m[i][t] * m[t][j]) / prev;
            }
            m[i][t] = 0;
        }
        prev = m[t][t];
    }
    return sign * m[k - 1][k - 1];
}

// Solution set of Q z = a over the rationals.
struct SolutionSet {
    enum class Kind { Empty, Unique, Affine };
    Kind kind = Kind::Empty;
    RatVec particular;            // valid for Unique and Affine
    std::vector<RatVec> kernel;   // basis of ker Q, nonempty only for Affine

    bool empty() const { return kind == Kind::Empty; }
};

inline SolutionSet solve(const IntMat& q, const RatVec& a) {
    const std::size_t k = q.size();
    if (a.size() != k) fail(Errc::DimensionMismatch, "solve: vector length does not match matrix size");
    const std::size_t n = k == 0 ? 0 : q[0].size();

    RatMat aug(k, RatVec(n + 1, Rat(0)));
    for (std::size_t i = 0; i < k; ++i) {
        for (std::size_t j = 0; j < n; ++j) aug[i][j] = Rat(q[i][j]);
        aug[i][n] = a[i];
    }

    std::vector<std::size_t> pivot_col;
    std::size_t r = 0;
    for (std::size_t c = 0; c < n && r < k; ++c) {
        std::size_t p = r;
        while (p < k && aug[p][c] == 0) ++p;
        if (p == k) continue;
        std::swap(aug[r], aug[p]);
        Rat pv = aug[r][c];
        for (std::size_t j = c; j <= n; ++j) aug[r][j] /= pv;
        for (std::size_t i = 0; i < k; ++i) {
            if (i == r || aug[i][c] == 0) continue;
            Rat f = aug[i][c];
            for (std::size_t j = c; j <= n; ++j) aug[i][j] -= f * aug[r][j];
        }
        pivot_col.push_back(c);
        ++r;
    }

    SolutionSet out;
    for (std::size_t i = r; i < k; ++i)
        if (aug[i][n] != 0) return out;  // inconsistent row 0 = c

    std::vector<bool> is_pivot(n, false);
    for (auto c : pivot_col) is_pivot[c] = true;

    out.particular.assign(n, Rat(0));
    for (std::size_t i = 0; i < pivot_col.size(); ++i) out.particular[pivot_col[i]] = aug[i][n];

    for (std::size_t c = 0; c < n; ++c) {
        if (is_pivot[c]) continue;
        RatVec basis(n, Rat(0));
        basis[c] = 1;
        for (std::size_t i = 0; i < pivot_col.size(); ++i) basis[pivot_col[i]] = -aug[i][c];
        out.kernel.push_back(std::move(basis));
    }
    out.kind = out.kernel.empty() ? SolutionSet::Kind::Unique : SolutionSet::Kind::Affine;
    return out;
}

// Signature (n_plus, n_zero, n_minus) of a symmetric matrix, computed by
// rational congruence diagonalization. When every remaining diagonal entry is
// zero but some off-diagonal q_ij is not, the congruence adding row/column j
// to row/column i turns the hyperbolic block into diag(+,-).
struct Inertia {
    std::size_t n_plus = 0;
    std::size_t n_zero = 0;
    std::size_t n_minus = 0;

    bool operator==(const Inertia&) const = default;
};

inline Inertia inertia(const IntMat& q) {
    const std::size_t k = q.size();
    RatMat m(k, RatVec(k));
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j) m[i][j] = Rat(q[i][j]);

    Inertia out;
    auto swap_rc = [&](std::size_t a, std::size_t b) {
        if (a == b) return;
        std::swap(m[a], m[b]);
        for (std::size_t i = 0; i < k; ++i) std::swap(m[i][a], m[i][b]);
    };
    auto add_rc = [&](std::size_t dst, std::size_t src, const Rat& f) {
        for (std::size_t j = 0; j < k; ++j) m[dst][j] += f * m[src][j];
        for (std::size_t i = 0; i < k; ++i) m[i][dst] += f * m[i][src];
    };

    for (std::size_t t = 0; t < k; ++t) {
        std::size_t d = t;
        while (d < k && m[d][d] == 0) ++d;
        if (d == k) {
            bool found = false;
            for (std::size_t i = t; i < k && !found; ++i)
                for (std::size_t j = i + 1; j < k && !found; ++j)
                    if (m[i][j] != 0) {
                        add_rc(i, j, Rat(1));
                        d = i;
                        found = true;
                    }
            if (!found) {
                out.n_zero += k - t;
                return out;
            }
        }
        swap_rc(t, d);
        Rat pivot = m[t][t];
        if (pivot > 0)
            ++out.n_plus;
        else
            ++out.n_minus;
        for (std::size_t i = t + 1; i < k; ++i) {
            if (m[i][t] == 0) continue;
            add_rc(i, t, -m[i][t] / pivot);
        }
    }
    return out;
}

// The empty graph counts as negative definite by convention.
inline bool is_negative_definite(const IntMat& q) {
    Inertia in = inertia(q);
    return in.n_plus == 0 && in.n_zero == 0;
}

// Invariant factors d_1 | d_2 | ... | d_k of an integer matrix (zeros last).
inline IntVec smith_normal_form(IntMat m) {
    const std::size_t k = m.size();
    const std::size_t n = k == 0 ? 0 : m[0].size();
    IntVec factors;

    std::size_t t = 0;
    while (t < k && t < n) {
        // find a nonzero pivot
        std::size_t pi = t, pj = t;
        bool found = false;
        for (std::size_t i = t; i < k && !found; ++i)
            for (std::size_t j = t; j < n && !found; ++j)
                if (m[i][j] != 0) {
                    pi = i;
                    pj = j;
                    found = true;
                }
        if (!found) break;
        std::swap(m[t], m[pi]);
        for (std::size_t i = 0; i < k; ++i) std::swap(m[i][t], m[i][pj]);

        bool again = true;
        while (again) {
            again = false;
            for (std::size_t i = t + 1; i < k; ++i) {
                if (m[i][t] == 0) continue;
                Int f = m[i][t] / m[t][t];
                for (std::size_t j = t; j < n; ++j) m[i][j] -= f * m[t][j];
                if (m[i][t] != 0) {  // remainder smaller than pivot; swap up and redo
                    std::swap(m[t], m[i]);
                    again = true;
                }
            }
            for (std::size_t j = t + 1; j < n; ++j) {
                if (m[t][j] == 0) continue;
                Int f = m[t][j] / m[t][t];
                for (std::size_t i = t; i < k; ++i) m[i][j] -= f * m[i][t];
                if (m[t][j] != 0) {
                    for (std::size_t i = 0; i < k; ++i) std::swap(m[i][t], m[i][j]);
                    again = true;
                }
            }
            if (!again) {
                // pivot must divide every remaining entry
                for (std::size_t i = t + 1; i < k && !again; ++i)
                    for (std::size_t j = t + 1; j < n && !again; ++j)
                        if (m[i][j] % m[t][t] != 0) {
                            for (std::size_t c = t; c < n; ++c) m[t][c] += m[i][c];
                            again = true;
                        }
            }
        }
        factors.push_back(abs(m[t][t]));
        ++t;
    }
    while (factors.size() < std::min(k, n)) factors.push_back(Int(0));
    return factors;
}

// Invariant factors with the unit factors dropped (zeros kept). Blow-ups pad
// the SNF with 1s, so this is the part that move-invariance checks compare.
inline IntVec nontrivial_invariant_factors(const IntMat& m) {
    IntVec out;
    for (const Int& d : smith_normal_form(m))
        if (d != 1) out.push_back(d);
    return out;
}

}  // namespace plumbing
