#pragma once

#include <algorithm>
#include <fstream>
#include <memory>
#include <set>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "errors.hpp"

namespace walkbij {

// One step on Z^n: a delta in {-1,0,+1} per coordinate.
using StepND = std::vector<int>;

inline char step_delta_char(int d) { return d > 0 ? '+' : (d < 0 ? '-' : '0'); }

inline std::string format_step_nd(const StepND& s) {
    std::string out;
    out.reserve(s.size());
    for (int d : s) out += step_delta_char(d);
    return out;
}

inline StepND parse_step_nd(std::string_view group) {
    StepND s;
    s.reserve(group.size());
    for (char c : group) {
        if (c == '+') s.push_back(+1);
        else if (c == '-') s.push_back(-1);
        else if (c == '0') s.push_back(0);
        else throw parse_error(std::string("unknown character '") + c + "' in step");
    }
    return s;
}

namespace detail {
// Enumeration rank mirroring the 1-D symbol order (up < down < stay).
inline int delta_rank(int d) { return d > 0 ? 0 : (d < 0 ? 1 : 2); }
inline bool step_order(const StepND& a, const StepND& b) {
    for (std::size_t i = 0; i < a.size(); ++i) {
        int ra = delta_rank(a[i]), rb = delta_rank(b[i]);
        if (ra != rb) return ra < rb;
    }
    return false;
}
} // namespace detail

// A finite step set S in {-1,0,+1}^n, required to be stable under negating
// any single coordinate of any member. Construction rejects sets violating
// that closure.
class StepSet {
public:
    static StepSet from_members(int dimension, std::vector<StepND> members) {
        if (dimension <= 0) throw parse_error("step set dimension must be positive");
        std::set<StepND> uniq;
        for (StepND& m : members) {
            if (static_cast<int>(m.size()) != dimension)
                throw parse_error("step '" + format_step_nd(m) + "' has wrong dimension");
            for (int d : m)
                if (d < -1 || d > 1) throw parse_error("step delta out of {-1,0,+1}");
            uniq.insert(std::move(m));
        }
        for (const StepND& m : uniq) {
            for (int c = 0; c < dimension; ++c) {
                if (m[c] == 0) continue;
                StepND r = m;
                r[c] = -r[c];
                if (!uniq.count(r))
                    throw parse_error("step set is not closed under negating coordinate " +
                                      std::to_string(c) + " of '" + format_step_nd(m) +
                                      "' (missing '" + format_step_nd(r) + "')");
            }
        }
        StepSet out;
        out.dimension_ = dimension;
        out.members_.assign(uniq.begin(), uniq.end());
        std::sort(out.members_.begin(), out.members_.end(), detail::step_order);
        out.lookup_ = std::move(uniq);
        return out;
    }

    // One step per line; '#' starts a comment line, blank lines are skipped.
    static StepSet parse(std::string_view text) {
        std::vector<StepND> members;
        int dimension = -1;
        std::size_t pos = 0;
        while (pos <= text.size()) {
            std::size_t nl = text.find('\n', pos);
            std::string_view line = text.substr(pos, nl == std::string_view::npos ? nl : nl - pos);
            pos = (nl == std::string_view::npos) ? text.size() + 1 : nl + 1;
            while (!line.empty() && (line.back() == '\r' || line.back() == ' ')) line.remove_suffix(1);
            while (!line.empty() && line.front() == ' ') line.remove_prefix(1);
            if (line.empty() || line.front() == '#') continue;
            StepND s = parse_step_nd(line);
            if (dimension < 0) dimension = static_cast<int>(s.size());
            members.push_back(std::move(s));
        }
        if (dimension < 0) throw parse_error("step set file contains no steps");
        return from_members(dimension, std::move(members));
    }

    static StepSet load(const std::string& path) {
        std::ifstream in(path);
        if (!in) throw parse_error("cannot open step-set file '" + path + "'");
        std::ostringstream buf;
        buf << in.rdbuf();
        return parse(buf.str());
    }

    // All of {-1,0,+1}^n.
    static StepSet full(int dimension) {
        std::vector<StepND> members;
        StepND cur(static_cast<std::size_t>(dimension), -1);
        for (;;) {
            members.push_back(cur);
            int c = 0;
            while (c < dimension && cur[c] == 1) cur[c++] = -1;
            if (c == dimension) break;
            ++cur[c];
        }
        return from_members(dimension, std::move(members));
    }

    int dimension() const { return dimension_; }
    std::size_t size() const { return members_.size(); }
    // Members in the canonical enumeration order.
    const std::vector<StepND>& members() const { return members_; }
    bool contains(const StepND& s) const { return lookup_.count(s) != 0; }

private:
    int dimension_ = 0;
    std::vector<StepND> members_;
    std::set<StepND> lookup_;
};

// A walk on Z^n starting at the origin, with steps drawn from a shared
// StepSet. Per-coordinate height profiles are cached at construction.
class WalkND {
public:
    explicit WalkND(std::shared_ptr<const StepSet> set) : WalkND(std::move(set), {}) {}

    WalkND(std::shared_ptr<const StepSet> set, std::vector<StepND> steps)
        : set_(std::move(set)), steps_(std::move(steps)) {
        const int n = set_->dimension();
        heights_.assign(static_cast<std::size_t>(n), std::vector<int>(steps_.size() + 1, 0));
        for (std::size_t i = 0; i < steps_.size(); ++i) {
            if (!set_->contains(steps_[i]))
                throw parse_error("step '" + format_step_nd(steps_[i]) + "' not in the step set");
            for (int c = 0; c < n; ++c)
                heights_[static_cast<std::size_t>(c)][i + 1] =
                    heights_[static_cast<std::size_t>(c)][i] + steps_[i][static_cast<std::size_t>(c)];
        }
    }

    const StepSet& step_set() const { return *set_; }
    std::shared_ptr<const StepSet> step_set_ptr() const { return set_; }
    int dimension() const { return set_->dimension(); }
    std::size_t size() const { return steps_.size(); }
    bool empty() const { return steps_.empty(); }
    const std::vector<StepND>& steps() const { return steps_; }

    // heights(c)[i] = coordinate c after i steps.
    const std::vector<int>& heights(int c) const { return heights_[static_cast<std::size_t>(c)]; }

    int end(int c) const { return heights_[static_cast<std::size_t>(c)].back(); }
    int min_height(int c) const {
        const auto& h = heights_[static_cast<std::size_t>(c)];
        return *std::min_element(h.begin(), h.end());
    }
    int depth(int c) const { return -min_height(c); }

    bool in_positive_orthant() const {
        for (int c = 0; c < dimension(); ++c)
            if (min_height(c) < 0) return false;
        return true;
    }

    bool ends_in_unit_cube() const {
        for (int c = 0; c < dimension(); ++c) {
            int e = end(c);
            if (e != 0 && e != 1) return false;
        }
        return true;
    }

    friend bool operator==(const WalkND& a, const WalkND& b) { return a.steps_ == b.steps_; }

private:
    std::shared_ptr<const StepSet> set_;
    std::vector<StepND> steps_;
    std::vector<std::vector<int>> heights_;
};

// Steps encoded as n-character groups over {+,0,-} separated by '.'.
inline WalkND parse_walk_nd(std::string_view text, std::shared_ptr<const StepSet> set) {
    std::vector<StepND> steps;
    if (!text.empty()) {
        std::size_t pos = 0;
        for (;;) {
            std::size_t dot = text.find('.', pos);
            std::string_view group =
                text.substr(pos, dot == std::string_view::npos ? dot : dot - pos);
            StepND s = parse_step_nd(group);
            if (static_cast<int>(s.size()) != set->dimension())
                throw parse_error("step group '" + std::string(group) + "' has wrong dimension");
            steps.push_back(std::move(s));
            if (dot == std::string_view::npos) break;
            pos = dot + 1;
        }
    }
    return WalkND(std::move(set), std::move(steps));
}

inline std::string format_walk_nd(const WalkND& w) {
    std::string out;
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (i > 0) out += '.';
        out += format_step_nd(w.steps()[i]);
    }
    return out;
}

} // namespace walkbij
