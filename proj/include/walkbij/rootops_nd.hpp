#pragma once

#include <numeric>
#include <string>
#include <vector>

#include "errors.hpp"
#include "rootops.hpp"
#include "walk_nd.hpp"

namespace walkbij {

namespace detail {

inline std::vector<int> identity_order(int n) {
    std::vector<int> order(static_cast<std::size_t>(n));
    std::iota(order.begin(), order.end(), 0);
    return order;
}

inline std::vector<int> coordinate_profile(const std::vector<StepND>& steps, int c) {
    std::vector<int> h(steps.size() + 1, 0);
    for (std::size_t i = 0; i < steps.size(); ++i)
        h[i + 1] = h[i] + steps[i][static_cast<std::size_t>(c)];
    return h;
}

} // namespace detail

// Multidimensional bijection: apply the 1-D flip rule to each coordinate of
// the walk separately, negating that coordinate of the selected steps. Step
// set closure under single-coordinate negation keeps every produced step in
// the set. The coordinate order is irrelevant since per-coordinate flips
// touch disjoint components.
inline WalkND theorem2_forward(const WalkND& w, const std::vector<int>& coordinate_order) {
    for (int c = 0; c < w.dimension(); ++c) {
        int e = w.end(c);
        if (e != 0 && e != 1)
            throw domain_error(errc::bad_endpoint,
                               "coordinate " + std::to_string(c) + " ends at " + std::to_string(e) +
                                   ", expected 0 or 1");
    }
    std::vector<StepND> steps = w.steps();
    for (int c : coordinate_order) {
        std::vector<int> h = detail::coordinate_profile(steps, c);
        int target = -1;
        for (std::size_t j = 1; j < h.size(); ++j) {
            if (h[j] == target) {
                steps[j - 1][static_cast<std::size_t>(c)] = +1;
                --target;
            }
        }
    }
    return WalkND(w.step_set_ptr(), std::move(steps));
}

inline WalkND theorem2_forward(const WalkND& w) {
    return theorem2_forward(w, detail::identity_order(w.dimension()));
}

inline WalkND theorem2_inverse(const WalkND& w, const std::vector<int>& coordinate_order) {
    for (int c = 0; c < w.dimension(); ++c)
        if (w.min_height(c) < 0)
            throw domain_error(errc::not_positive,
                               "coordinate " + std::to_string(c) + " visits a negative number");
    std::vector<StepND> steps = w.steps();
    for (int c : coordinate_order) {
        std::vector<int> h = detail::coordinate_profile(steps, c);
        int d = h.back() / 2;
        for (int k = 0; k < d; ++k) {
            std::size_t last = 0;
            for (std::size_t j = 0; j < h.size(); ++j)
                if (h[j] == k) last = j;
            steps[last][static_cast<std::size_t>(c)] = -1; // step after the last visit, an up-step
        }
    }
    return WalkND(w.step_set_ptr(), std::move(steps));
}

inline WalkND theorem2_inverse(const WalkND& w) {
    return theorem2_inverse(w, detail::identity_order(w.dimension()));
}

} // namespace walkbij
