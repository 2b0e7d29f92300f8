#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "walk.hpp"

namespace walkbij {

// Index of the down-step whose endpoint is the first attainment of the
// global minimum. Requires min < 0, in which case the first attainment is
// necessarily entered from above.
inline std::size_t raising_step_index(const Walk1D& w) {
    int m = w.min_height();
    if (m == 0)
        throw domain_error(errc::minimum_is_zero,
                           "the walk never goes below 0, no step first attains a negative minimum");
    return static_cast<std::size_t>(w.first_visit(m)) - 1;
}

// Raising operator: reverse the down-step that first attains the global
// minimum. Raises the minimum by 1 and the end point by 2.
inline Walk1D raise_walk(const Walk1D& w) {
    return w.with_flipped_step(raising_step_index(w));
}

// Lowering operator, inverse of raise_walk: reverse the up-step immediately
// following the last attainment of the global minimum.
inline Walk1D lower_walk(const Walk1D& w) {
    int m = w.min_height();
    std::size_t j = static_cast<std::size_t>(w.last_visit(m));
    if (j == w.size())
        throw domain_error(errc::not_in_image,
                           "the minimum is last attained at the end of the walk");
    if (w.step(j).delta != +1)
        throw domain_error(errc::not_in_image,
                           "the step after the last visit to the minimum is not an up-step");
    return w.with_flipped_step(j);
}

// Step indices of the down-steps that first reach -1, -2, ..., -depth(w),
// in increasing order.
inline std::vector<std::size_t> theorem1_flip_positions(const Walk1D& w) {
    std::vector<std::size_t> pos;
    int target = -1;
    const std::vector<int>& h = w.heights();
    for (std::size_t j = 1; j < h.size(); ++j) {
        if (h[j] == target) {
            pos.push_back(j - 1);
            --target;
        }
    }
    return pos;
}

// The bijection from walks ending at 0 or 1 onto positive walks: reverse, for
// each k in 1..depth, the down-step that first reaches -k. Preserves length
// and neutral count; the end point becomes 2*depth + end. Equal to raise_walk
// iterated depth times.
inline Walk1D theorem1_forward(const Walk1D& w) {
    int e = w.end();
    if (e != 0 && e != 1)
        throw domain_error(errc::bad_endpoint,
                           "walk ends at " + std::to_string(e) + ", expected 0 or 1");
    return w.with_flipped_steps(theorem1_flip_positions(w));
}

// Inverse bijection: on a positive walk ending at m, reverse the up-step
// immediately following the last visit to k, for k = 0..floor(m/2)-1.
inline Walk1D theorem1_inverse(const Walk1D& w) {
    if (!w.is_positive())
        throw domain_error(errc::not_positive, "walk visits a negative number");
    int d = w.end() / 2;
    std::vector<std::size_t> pos;
    pos.reserve(static_cast<std::size_t>(d));
    for (int k = 0; k < d; ++k)
        pos.push_back(static_cast<std::size_t>(w.last_visit(k)));
    return w.with_flipped_steps(pos);
}

// Unique factorization of a walk as M_0 s_1 M_1 ... s_{2d+e} M_{2d+e}:
// alternately a (possibly empty) Motzkin factor (a sub-walk that starts and
// ends at the same number without going below it) and a single non-stationary
// step; the first d singles are down-steps, the remaining d+e are up-steps.
struct MotzkinDecomposition {
    int d = 0;
    int e = 0;
    std::vector<Walk1D> motzkin_factors;       // singles.size() + 1 factors
    std::vector<std::size_t> single_positions; // step indices in the source walk
    std::vector<Step1D> singles;

    Walk1D reassemble() const {
        std::vector<Step1D> steps;
        for (std::size_t i = 0; i < motzkin_factors.size(); ++i) {
            const auto& f = motzkin_factors[i].steps();
            steps.insert(steps.end(), f.begin(), f.end());
            if (i < singles.size()) steps.push_back(singles[i]);
        }
        return Walk1D(std::move(steps));
    }
};

// The down singles end at the first visits to -1..-d; the up singles leave
// the levels -d..e-1 for the last time.
inline MotzkinDecomposition motzkin_decompose(const Walk1D& w) {
    MotzkinDecomposition out;
    out.d = w.depth();
    out.e = w.end();
    for (int k = 1; k <= out.d; ++k)
        out.single_positions.push_back(static_cast<std::size_t>(w.first_visit(-k)) - 1);
    for (int v = -out.d; v < out.e; ++v)
        out.single_positions.push_back(static_cast<std::size_t>(w.last_visit(v)));
    std::size_t prev = 0;
    for (std::size_t idx : out.single_positions) {
        out.motzkin_factors.push_back(subwalk(w, prev, idx));
        out.singles.push_back(w.step(idx));
        prev = idx + 1;
    }
    out.motzkin_factors.push_back(subwalk(w, prev, w.size()));
    return out;
}

// Steps in reverse order and opposite direction (neutral kinds unchanged).
// An involution; maps positive walks ending at k to walks ending at their
// global minimum -k.
inline Walk1D reverse_negate(const Walk1D& w) {
    std::vector<Step1D> steps(w.steps().rbegin(), w.steps().rend());
    for (Step1D& s : steps) s.delta = -s.delta;
    return Walk1D(std::move(steps));
}

// Apply lower_walk until its precondition fails, i.e. until the walk ends at
// its global minimum. Maps positive walks ending at k to walks ending at
// their minimum -k.
inline Walk1D full_lower(const Walk1D& w) {
    if (!w.is_positive())
        throw domain_error(errc::not_positive, "walk visits a negative number");
    Walk1D cur = w;
    for (;;) {
        int m = cur.min_height();
        std::size_t j = static_cast<std::size_t>(cur.last_visit(m));
        if (j == cur.size()) return cur;
        cur = cur.with_flipped_step(j); // provably an up-step
    }
}

// recurrent ++ [up] ++ suffix. The inserted up-step is the last step of the
// result to start at height 0, which makes the decomposition recoverable.
inline Walk1D concat_with_upstep(const Walk1D& recurrent, const Walk1D& suffix) {
    if (recurrent.end() != 0)
        throw domain_error(errc::bad_endpoint, "prefix must be recurrent (end at 0)");
    if (!suffix.is_positive())
        throw domain_error(errc::not_positive, "suffix must be a positive walk");
    if (suffix.end() % 2 != 0)
        throw domain_error(errc::bad_endpoint, "suffix must end at an even number");
    std::vector<Step1D> steps = recurrent.steps();
    steps.reserve(recurrent.size() + 1 + suffix.size());
    steps.push_back(up_step());
    steps.insert(steps.end(), suffix.steps().begin(), suffix.steps().end());
    return Walk1D(std::move(steps));
}

// Inverse of concat_with_upstep: cut out the last up-step starting at 0.
inline std::pair<Walk1D, Walk1D> split_at_last_up_from_zero(const Walk1D& w) {
    int e = w.end();
    if (e <= 0 || e % 2 == 0)
        throw domain_error(errc::bad_endpoint,
                           "walk ends at " + std::to_string(e) + ", expected a positive odd number");
    std::size_t j = static_cast<std::size_t>(w.last_visit(0));
    if (j >= w.size() || w.step(j).delta != +1)
        throw domain_error(errc::no_such_step, "no up-step starting at height 0");
    return {subwalk(w, 0, j), subwalk(w, j + 1, w.size())};
}

} // namespace walkbij
