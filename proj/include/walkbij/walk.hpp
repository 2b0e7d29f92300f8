#pragma once

#include <algorithm>
#include <cctype>
#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "errors.hpp"

namespace walkbij {

// One unit step on Z: delta in {-1, 0, +1}. Neutral steps (delta 0) carry a
// kind index; non-neutral steps always have kind 0.
struct Step1D {
    int delta = 0;
    int kind = 0;

    friend bool operator==(const Step1D&, const Step1D&) = default;
};

inline Step1D up_step() { return {+1, 0}; }
inline Step1D down_step() { return {-1, 0}; }
inline Step1D neutral_step(int kind = 0) { return {0, kind}; }

// Number of distinguished neutral-step kinds: t=0 gives binary walks,
// t=1 ternary (Motzkin-type) walks.
struct Alphabet {
    int t = 0;

    int symbol_count() const { return 2 + t; }
    // Enumeration order is U < D < N0 < N1 < ...
    Step1D symbol(int index) const {
        if (index == 0) return up_step();
        if (index == 1) return down_step();
        return neutral_step(index - 2);
    }
};

// A finite walk on Z starting at 0, immutable after construction.
// heights()[i] is the position after i steps; heights()[0] == 0.
class Walk1D {
public:
    Walk1D() : heights_{0} {}

    explicit Walk1D(std::vector<Step1D> steps) : steps_(std::move(steps)) {
        heights_.resize(steps_.size() + 1);
        heights_[0] = 0;
        for (std::size_t i = 0; i < steps_.size(); ++i) {
            if (steps_[i].delta < -1 || steps_[i].delta > 1)
                throw std::invalid_argument("step delta outside {-1,0,+1}");
            if (steps_[i].delta != 0) steps_[i].kind = 0;
            heights_[i + 1] = heights_[i] + steps_[i].delta;
        }
    }

    std::size_t size() const { return steps_.size(); }
    bool empty() const { return steps_.empty(); }
    const std::vector<Step1D>& steps() const { return steps_; }
    const Step1D& step(std::size_t i) const { return steps_[i]; }
    const std::vector<int>& heights() const { return heights_; }
    int height(std::size_t time) const { return heights_[time]; }

    int end() const { return heights_.back(); }
    int min_height() const { return *std::min_element(heights_.begin(), heights_.end()); }
    int depth() const { return -min_height(); }

    int neutral_count() const {
        int n = 0;
        for (const Step1D& s : steps_)
            if (s.delta == 0) ++n;
        return n;
    }

    bool is_positive() const { return min_height() == 0; }
    bool is_recurrent() const { return end() == 0; }
    bool is_almost_recurrent() const { return end() == 0 || end() == 1; }

    // Smallest time j with height v, or -1 if v is never visited.
    int first_visit(int v) const {
        for (std::size_t j = 0; j < heights_.size(); ++j)
            if (heights_[j] == v) return static_cast<int>(j);
        return -1;
    }

    // Largest time j with height v, or -1 if v is never visited.
    int last_visit(int v) const {
        for (std::size_t j = heights_.size(); j-- > 0;)
            if (heights_[j] == v) return static_cast<int>(j);
        return -1;
    }

    // Copy with the direction of step i reversed (up <-> down).
    Walk1D with_flipped_step(std::size_t i) const {
        return with_flipped_steps({i});
    }

    Walk1D with_flipped_steps(const std::vector<std::size_t>& indices) const {
        std::vector<Step1D> steps = steps_;
        for (std::size_t i : indices) {
            if (i >= steps.size() || steps[i].delta == 0)
                throw std::logic_error("cannot reverse a neutral or out-of-range step");
            steps[i].delta = -steps[i].delta;
        }
        return Walk1D(std::move(steps));
    }

    friend bool operator==(const Walk1D& a, const Walk1D& b) { return a.steps_ == b.steps_; }

private:
    std::vector<Step1D> steps_;
    std::vector<int> heights_;
};

// Steps [begin, end) of w as a walk in its own right (re-based to start at 0).
inline Walk1D subwalk(const Walk1D& w, std::size_t begin, std::size_t end) {
    return Walk1D(std::vector<Step1D>(w.steps().begin() + static_cast<std::ptrdiff_t>(begin),
                                      w.steps().begin() + static_cast<std::ptrdiff_t>(end)));
}

struct WalkStats {
    std::size_t length = 0;
    int end = 0;
    int min = 0;
    int depth = 0;
    int neutral_count = 0;
};

inline WalkStats stats(const Walk1D& w) {
    WalkStats s;
    s.length = w.size();
    s.end = w.end();
    s.min = w.min_height();
    s.depth = -s.min;
    s.neutral_count = w.neutral_count();
    return s;
}

struct WalkClass {
    bool positive = false;
    bool recurrent = false;
    bool almost_recurrent = false;
};

inline WalkClass classify(const Walk1D& w) {
    return {w.is_positive(), w.is_recurrent(), w.is_almost_recurrent()};
}

// Text encoding: 'U' (+1), 'D' (-1), 'N' followed by optional decimal digits
// for the neutral kind; 'N' alone means 'N0'. The empty string is the empty
// walk.
inline Walk1D parse_walk(std::string_view text, const Alphabet& alphabet) {
    std::vector<Step1D> steps;
    steps.reserve(text.size());
    std::size_t i = 0;
    while (i < text.size()) {
        char c = text[i++];
        if (c == 'U') {
            steps.push_back(up_step());
        } else if (c == 'D') {
            steps.push_back(down_step());
        } else if (c == 'N') {
            long kind = 0;
            bool digits = false;
            while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
                kind = kind * 10 + (text[i] - '0');
                digits = true;
                ++i;
                if (kind > 1'000'000) throw parse_error("neutral kind out of range");
            }
            (void)digits;
            if (kind >= alphabet.t)
                throw parse_error("neutral kind " + std::to_string(kind) +
                                  " not allowed for t=" + std::to_string(alphabet.t));
            steps.push_back(neutral_step(static_cast<int>(kind)));
        } else {
            throw parse_error(std::string("unknown character '") + c + "' in walk text");
        }
    }
    return Walk1D(std::move(steps));
}

// Canonical encoding; kind 0 prints as a bare 'N', so walks over t <= 1 never
// show kind digits. parse_walk(format_walk(w)) == w.
inline std::string format_walk(const Walk1D& w) {
    std::string out;
    out.reserve(w.size());
    for (const Step1D& s : w.steps()) {
        if (s.delta == +1) {
            out += 'U';
        } else if (s.delta == -1) {
            out += 'D';
        } else if (s.kind == 0) {
            out += 'N';
        } else {
            out += 'N';
            out += std::to_string(s.kind);
        }
    }
    return out;
}

inline bool fits_alphabet(const Walk1D& w, const Alphabet& alphabet) {
    for (const Step1D& s : w.steps())
        if (s.delta == 0 && s.kind >= alphabet.t) return false;
    return true;
}

} // namespace walkbij
