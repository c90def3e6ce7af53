#pragma once

// Independent oracles used to freeze expected values. Everything here takes a
// different algorithmic route from the library implementation it checks.

#include <algorithm>
#include <cstddef>
#include <optional>
#include <random>
#include <vector>

#include "plumbing/graph.hpp"
#include "plumbing/linalg.hpp"
#include "plumbing/rational.hpp"

namespace oracle {

using plumbing::Int;
using plumbing::IntMat;
using plumbing::Rat;
using plumbing::RatVec;

// Cofactor-expansion determinant (exponential; fine for k <= 8).
inline Int det_cofactor(const IntMat& m) {
    const std::size_t k = m.size();
    if (k == 0) return Int(1);
    if (k == 1) return m[0][0];
    Int out = 0;
    for (std::size_t j = 0; j < k; ++j) {
        if (m[0][j] == 0) continue;
        IntMat minor(k - 1, std::vector<Int>(k - 1));
        for (std::size_t r = 1; r < k; ++r)
            for (std::size_t c = 0, cc = 0; c < k; ++c) {
                if (c == j) continue;
                minor[r - 1][cc++] = m[r][c];
            }
        Int term = m[0][j] * det_cofactor(minor);
        out += (j % 2 == 0) ? term : -term;
    }
    return out;
}

// Characteristic polynomial coefficients of Q via exact Leverrier-Faddeev,
// then the signature from Descartes' rule (exact for real-rooted polynomials).
inline plumbing::Inertia inertia_descartes(const IntMat& q) {
    const std::size_t k = q.size();
    // p(x) = det(xI - Q) = x^k + c1 x^{k-1} + ... + ck
    std::vector<Rat> c(k + 1, Rat(0));
    c[0] = 1;
    std::vector<std::vector<Rat>> m(k, std::vector<Rat>(k, Rat(0)));  // M_0 = 0
    for (std::size_t step = 1; step <= k; ++step) {
        // M_step = Q * M_{step-1} + c_{step-1} I ; c_step = -tr(Q * M_step)/step
        std::vector<std::vector<Rat>> qm(k, std::vector<Rat>(k, Rat(0)));
        for (std::size_t i = 0; i < k; ++i)
            for (std::size_t j = 0; j < k; ++j) {
                Rat acc = 0;
                for (std::size_t t = 0; t < k; ++t) acc += Rat(q[i][t]) * m[t][j];
                qm[i][j] = acc;
            }
        for (std::size_t i = 0; i < k; ++i) qm[i][i] += c[step - 1];
        Rat tr = 0;
        for (std::size_t i = 0; i < k; ++i)
            for (std::size_t t = 0; t < k; ++t) tr += Rat(q[i][t]) * qm[t][i];
        c[step] = -tr / Rat(static_cast<long>(step));
        m = std::move(qm);
    }
    // trailing zero coefficients = multiplicity of eigenvalue 0
    std::size_t zero = 0;
    while (zero < k && c[k - zero] == 0) ++zero;
    // Descartes on p(x) with the zero roots stripped
    std::vector<Rat> coeffs(c.begin(), c.begin() + (k - zero) + 1);
    auto variations = [](const std::vector<Rat>& v) {
        std::size_t n = 0;
        int last = 0;
        for (const Rat& x : v) {
            if (x == 0) continue;
            int s = x > 0 ? 1 : -1;
            if (last != 0 && s != last) ++n;
            last = s;
        }
        return n;
    };
    std::size_t plus = variations(coeffs);
    std::vector<Rat> neg = coeffs;  // p(-x)
    for (std::size_t i = 0; i < neg.size(); ++i)
        if (i % 2 == 1) neg[i] = -neg[i];
    std::size_t minus = variations(neg);
    return plumbing::Inertia{plus, zero, minus};
}

// Exact LP-style strict/non-strict feasibility by brute-force active-set
// enumeration (fine for the tiny systems in the tests). Decides whether the
// region {x : rows r: r.coeff . x + r.constant (>|>=) 0} is nonempty inside a
// large box, which is enough for the bounded random data used in tests.
struct OracleConstraint {
    RatVec coeff;
    Rat constant;
    bool strict;
};

inline std::optional<RatVec> solve_square(const std::vector<RatVec>& a, const RatVec& b) {
    const std::size_t n = b.size();
    std::vector<RatVec> m(n, RatVec(n + 1));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) m[i][j] = a[i][j];
        m[i][n] = b[i];
    }
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t p = c;
        while (p < n && m[p][c] == 0) ++p;
        if (p == n) return std::nullopt;
        std::swap(m[c], m[p]);
        Rat pv = m[c][c];
        for (auto& x : m[c]) x /= pv;
        for (std::size_t i = 0; i < n; ++i) {
            if (i == c || m[i][c] == 0) continue;
            Rat f = m[i][c];
            for (std::size_t j = 0; j <= n; ++j) m[i][j] -= f * m[c][j];
        }
    }
    RatVec x(n);
    for (std::size_t i = 0; i < n; ++i) x[i] = m[i][n];
    return x;
}

// Maximizes the minimum slack over vertices of the boxed closure; strict
// feasibility holds iff the optimum slack is positive.
inline bool feasible_bruteforce(std::size_t nvars, const std::vector<OracleConstraint>& cons,
                                const Rat& box = Rat(1000000)) {
    // variables: x_0..x_{nvars-1}, s ; maximize s over
    //   coeff . x + constant - s >= 0  (for strict rows)
    //   coeff . x + constant >= 0      (for non-strict rows)
    //   box constraints |x_i| <= box, 0 <= s <= 1
    std::vector<OracleConstraint> sys;
    for (const auto& c : cons) {
        OracleConstraint e{c.coeff, c.constant, false};
        e.coeff.resize(nvars + 1, Rat(0));
        if (c.strict) e.coeff[nvars] = -1;
        sys.push_back(std::move(e));
    }
    for (std::size_t i = 0; i < nvars; ++i) {
        OracleConstraint lo, hi;
        lo.coeff.assign(nvars + 1, Rat(0));
        hi.coeff.assign(nvars + 1, Rat(0));
        lo.coeff[i] = 1;
        lo.constant = box;
        hi.coeff[i] = -1;
        hi.constant = box;
        lo.strict = hi.strict = false;
        sys.push_back(lo);
        sys.push_back(hi);
    }
    OracleConstraint s_lo, s_hi;
    s_lo.coeff.assign(nvars + 1, Rat(0));
    s_lo.coeff[nvars] = 1;
    s_lo.constant = 0;
    s_lo.strict = false;
    s_hi.coeff.assign(nvars + 1, Rat(0));
    s_hi.coeff[nvars] = -1;
    s_hi.constant = 1;
    s_hi.strict = false;
    sys.push_back(s_lo);
    sys.push_back(s_hi);

    const std::size_t dim = nvars + 1;
    const std::size_t n = sys.size();
    std::vector<std::size_t> idx(n);
    for (std::size_t i = 0; i < n; ++i) idx[i] = i;

    Rat best(-1);
    std::vector<std::size_t> pick(dim);
    std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t start, std::size_t chosen) {
        if (chosen == dim) {
            std::vector<RatVec> a;
            RatVec b;
            for (std::size_t i : pick) {
                a.push_back(sys[i].coeff);
                b.push_back(-sys[i].constant);
            }
            auto x = solve_square(a, b);
            if (!x) return;
            for (const auto& c : sys) {
                Rat v = c.constant;
                for (std::size_t j = 0; j < dim; ++j) v += c.coeff[j] * (*x)[j];
                if (v < 0) return;
            }
            if ((*x)[nvars] > best) best = (*x)[nvars];
            return;
        }
        for (std::size_t i = start; i < n; ++i) {
            pick[chosen] = i;
            rec(i + 1, chosen + 1);
        }
    };
    rec(0, 0);
    return best > 0;
}

// Decides exactly whether Q z = a admits a solution in the requested orthant,
// directly in the z variables (no reuse of the library's solver).
inline bool orthant_solvable_bruteforce(const IntMat& q, const RatVec& a, bool positive) {
    const std::size_t k = q.size();
    std::vector<OracleConstraint> cons;
    for (std::size_t i = 0; i < k; ++i) {
        // equality as two inequalities
        OracleConstraint up, down;
        up.coeff.assign(k, Rat(0));
        down.coeff.assign(k, Rat(0));
        for (std::size_t j = 0; j < k; ++j) {
            up.coeff[j] = Rat(q[i][j]);
            down.coeff[j] = -Rat(q[i][j]);
        }
        up.constant = -a[i];
        down.constant = a[i];
        up.strict = down.strict = false;
        cons.push_back(up);
        cons.push_back(down);
    }
    for (std::size_t i = 0; i < k; ++i) {
        OracleConstraint c;
        c.coeff.assign(k, Rat(0));
        c.coeff[i] = positive ? 1 : -1;
        c.constant = 0;
        c.strict = positive;
        cons.push_back(c);
    }
    return feasible_bruteforce(k, cons);
}

// ---- random generators -----------------------------------------------------

inline IntMat random_symmetric(std::mt19937_64& rng, std::size_t k, int lo, int hi,
                               bool nonneg_offdiag) {
    std::uniform_int_distribution<int> d(lo, hi);
    IntMat m(k, std::vector<Int>(k, Int(0)));
    for (std::size_t i = 0; i < k; ++i) {
        m[i][i] = d(rng);
        for (std::size_t j = i + 1; j < k; ++j) {
            int v = d(rng);
            if (nonneg_offdiag && v < 0) v = -v;
            m[i][j] = m[j][i] = v;
        }
    }
    return m;
}

// Random genus-0 tree with k vertices and self-intersections in [lo, hi].
inline plumbing::PlumbingGraph random_tree(std::mt19937_64& rng, std::size_t k, int lo, int hi) {
    std::uniform_int_distribution<int> s(lo, hi);
    std::vector<plumbing::Vertex> vs;
    std::vector<std::pair<std::string, std::string>> es;
    for (std::size_t i = 0; i < k; ++i) {
        vs.push_back({"t" + std::to_string(i), 0, s(rng)});
        if (i > 0) {
            std::uniform_int_distribution<std::size_t> pick(0, i - 1);
            es.push_back({"t" + std::to_string(pick(rng)), "t" + std::to_string(i)});
        }
    }
    return plumbing::PlumbingGraph(std::move(vs), std::move(es));
}

inline RatVec random_positive_vector(std::mt19937_64& rng, std::size_t k, int num_hi = 9) {
    std::uniform_int_distribution<int> num(1, num_hi), den(1, 4);
    RatVec a(k);
    for (auto& x : a) x = Rat(num(rng), den(rng));
    return a;
}

}  // namespace oracle
