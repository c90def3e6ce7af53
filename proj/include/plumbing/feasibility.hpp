#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "plumbing/rational.hpp"

namespace plumbing {

// One affine condition  coeff . t + constant  (> 0 when strict, >= 0 otherwise).
struct LinearConstraint {
    RatVec coeff;
    Rat constant;
    bool strict = true;
};

// Decides feasibility of a system of strict/non-strict affine inequalities by
// Fourier-Motzkin elimination and, when feasible, back-substitutes a witness.
// Exact; intended for the small systems arising from kernel dimensions here.
inline std::optional<RatVec> find_feasible_point(std::size_t nvars,
                                                 std::vector<LinearConstraint> constraints) {
    // levels[v] holds constraints over variables 0..v (level nvars-1 = input).
    std::vector<std::vector<LinearConstraint>> levels(nvars + 1);
    levels[nvars] = std::move(constraints);

    for (std::size_t v = nvars; v-- > 0;) {
        const auto& cur = levels[v + 1];
        std::vector<const LinearConstraint*> pos, neg;
        std::vector<LinearConstraint> projected;
        for (const auto& c : cur) {
            const Rat& cv = c.coeff.size() > v ? c.coeff[v] : Rat(0);
            if (cv > 0)
                pos.push_back(&c);
            else if (cv < 0)
                neg.push_back(&c);
            else {
                LinearConstraint p = c;
                p.coeff.resize(v);
                projected.push_back(std::move(p));
            }
        }
        for (const auto* p : pos) {
            for (const auto* n : neg) {
                // positive combination cancelling variable v
                Rat mp = -n->coeff[v];
                Rat mn = p->coeff[v];
                LinearConstraint c;
                c.coeff.assign(v, Rat(0));
                for (std::size_t j = 0; j < v; ++j) {
                    if (j < p->coeff.size()) c.coeff[j] += mp * p->coeff[j];
                    if (j < n->coeff.size()) c.coeff[j] += mn * n->coeff[j];
                }
                c.constant = mp * p->constant + mn * n->constant;
                c.strict = p->strict || n->strict;
                projected.push_back(std::move(c));
            }
        }
        levels[v] = std::move(projected);
    }

    for (const auto& c : levels[0]) {
        if (c.strict ? (c.constant <= 0) : (c.constant < 0)) return std::nullopt;
    }

    RatVec t(nvars, Rat(0));
    for (std::size_t v = 0; v < nvars; ++v) {
        bool has_lo = false, has_hi = false, lo_strict = false, hi_strict = false;
        Rat lo, hi;
        for (const auto& c : levels[v + 1]) {
            const Rat& cv = c.coeff.size() > v ? c.coeff[v] : Rat(0);
            if (cv == 0) continue;
            Rat rest = c.constant;
            for (std::size_t j = 0; j < v; ++j)
                if (j < c.coeff.size() && c.coeff[j] != 0) rest += c.coeff[j] * t[j];
            Rat bound = -rest / cv;
            if (cv > 0) {  // t_v >(=) bound
                if (!has_lo || bound > lo || (bound == lo && c.strict)) {
                    lo = bound;
                    lo_strict = c.strict;
                }
                has_lo = true;
            } else {  // t_v <(=) bound
                if (!has_hi || bound < hi || (bound == hi && c.strict)) {
                    hi = bound;
                    hi_strict = c.strict;
                }
                has_hi = true;
            }
        }
        if (has_lo && has_hi) {
            // FM guarantees lo <= hi, with equality only when both are closed
            t[v] = (lo == hi) ? lo : (lo + hi) / 2;
        } else if (has_lo) {
            t[v] = lo_strict ? lo + 1 : lo;
        } else if (has_hi) {
            t[v] = hi_strict ? hi - 1 : hi;
        }
    }
    return t;
}

}  // namespace plumbing
