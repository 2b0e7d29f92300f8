#pragma once

#include <string>
#include <vector>

#include "bigint.hpp"
#include "errors.hpp"
#include "report.hpp"

namespace walkbij {

// Formal power series with exact integer coefficients, truncated at a fixed
// degree cap; multiplication drops terms beyond the cap.
class TruncatedSeries {
public:
    explicit TruncatedSeries(int degree_cap)
        : coeffs_(static_cast<std::size_t>(degree_cap) + 1, BigInt(0)) {}

    static TruncatedSeries from_coeffs(std::vector<BigInt> coeffs, int degree_cap) {
        TruncatedSeries s(degree_cap);
        for (std::size_t i = 0; i < coeffs.size() && i < s.coeffs_.size(); ++i)
            s.coeffs_[i] = std::move(coeffs[i]);
        return s;
    }

    static TruncatedSeries one(int degree_cap) {
        TruncatedSeries s(degree_cap);
        s.coeffs_[0] = 1;
        return s;
    }

    int degree_cap() const { return static_cast<int>(coeffs_.size()) - 1; }
    const BigInt& coeff(int i) const { return coeffs_[static_cast<std::size_t>(i)]; }
    void set_coeff(int i, BigInt v) { coeffs_[static_cast<std::size_t>(i)] = std::move(v); }
    const std::vector<BigInt>& coeffs() const { return coeffs_; }

    friend bool operator==(const TruncatedSeries&, const TruncatedSeries&) = default;

    friend TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b) {
        TruncatedSeries out(std::min(a.degree_cap(), b.degree_cap()));
        for (int i = 0; i <= out.degree_cap(); ++i) out.set_coeff(i, a.coeff(i) + b.coeff(i));
        return out;
    }

    friend TruncatedSeries operator-(const TruncatedSeries& a, const TruncatedSeries& b) {
        TruncatedSeries out(std::min(a.degree_cap(), b.degree_cap()));
        for (int i = 0; i <= out.degree_cap(); ++i) out.set_coeff(i, a.coeff(i) - b.coeff(i));
        return out;
    }

    friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
        TruncatedSeries out(std::min(a.degree_cap(), b.degree_cap()));
        for (int i = 0; i <= out.degree_cap(); ++i) {
            if (a.coeff(i) == 0) continue;
            for (int j = 0; i + j <= out.degree_cap(); ++j) {
                if (b.coeff(j) == 0) continue;
                out.coeffs_[static_cast<std::size_t>(i + j)] += a.coeff(i) * b.coeff(j);
            }
        }
        return out;
    }

    // Multiplicative inverse modulo X^{cap+1}; the constant term must be
    // +1 or -1 so the coefficients stay integral.
    TruncatedSeries reciprocal() const {
        const BigInt& c0 = coeff(0);
        if (c0 != 1 && c0 != -1)
            throw domain_error(errc::non_unit_constant_term,
                               "constant term is " + c0.str() + ", expected 1 or -1");
        TruncatedSeries out(degree_cap());
        out.set_coeff(0, c0); // 1/c0 = c0 for units
        for (int k = 1; k <= degree_cap(); ++k) {
            BigInt acc = 0;
            for (int i = 1; i <= k; ++i) acc += coeff(i) * out.coeff(k - i);
            out.set_coeff(k, -c0 * acc);
        }
        return out;
    }

private:
    std::vector<BigInt> coeffs_;
};

inline TruncatedSeries series_mul(const TruncatedSeries& a, const TruncatedSeries& b) {
    return a * b;
}

inline TruncatedSeries series_reciprocal(const TruncatedSeries& p) { return p.reciprocal(); }

// R_{t,0..max_index}: the number of recurrent walks of each length with t
// neutral-step kinds, i.e. the coefficient of X^0 in (X^-1 + t + X)^i.
// Computed by a height-indexed recurrence with neutral weight t.
inline std::vector<BigInt> r_coeffs(int t, int max_index) {
    std::vector<BigInt> out;
    out.reserve(static_cast<std::size_t>(max_index) + 1);
    const int offset = max_index;
    std::vector<BigInt> cur(static_cast<std::size_t>(2 * max_index + 1), BigInt(0));
    cur[static_cast<std::size_t>(offset)] = 1;
    out.push_back(1);
    for (int i = 1; i <= max_index; ++i) {
        std::vector<BigInt> next(cur.size(), BigInt(0));
        for (int h = -max_index; h <= max_index; ++h) {
            const BigInt& ways = cur[static_cast<std::size_t>(h + offset)];
            if (ways == 0) continue;
            if (h - 1 >= -max_index) next[static_cast<std::size_t>(h - 1 + offset)] += ways;
            if (h + 1 <= max_index) next[static_cast<std::size_t>(h + 1 + offset)] += ways;
            if (t != 0) next[static_cast<std::size_t>(h + offset)] += ways * t;
        }
        cur.swap(next);
        out.push_back(cur[static_cast<std::size_t>(offset)]);
    }
    return out;
}

namespace detail {

inline VerificationReport identity_report(std::string name) {
    VerificationReport rep;
    rep.name = std::move(name);
    return rep;
}

inline void identity_case(VerificationReport& rep, bool ok, const std::string& describe) {
    rep.domain_size += 1;
    rep.codomain_size += 1;
    if (!ok) {
        rep.injective = false;
        rep.surjective = false;
        rep.note_counterexample(describe);
    }
}

} // namespace detail

// Convolution of the R coefficients: sum_{i+j=l} R_{t,i} R_{t,j}.
inline BigInt r_convolution(const std::vector<BigInt>& r, int l) {
    BigInt lhs = 0;
    for (int i = 0; i <= l; ++i)
        lhs += r[static_cast<std::size_t>(i)] * r[static_cast<std::size_t>(l - i)];
    return lhs;
}

inline bool eq1_holds(int n) {
    BigInt lhs = 0;
    for (int i = 0; i <= n; ++i) lhs += binomial(2 * i, i) * binomial(2 * (n - i), n - i);
    return lhs == ipow(4, static_cast<unsigned>(n));
}

inline bool eq2_holds(int t, int l) {
    BigInt lhs = r_convolution(r_coeffs(t, l), l);
    BigInt numer = ipow(t + 2, static_cast<unsigned>(l + 1)) -
                   ipow(t - 2, static_cast<unsigned>(l + 1));
    return numer % 4 == 0 && lhs * 4 == numer;
}

inline bool eq3_holds(int t, int n) {
    BigInt lhs = r_convolution(r_coeffs(t, n), n);
    TruncatedSeries denom(n >= 2 ? n : 2);
    denom.set_coeff(0, 1);
    denom.set_coeff(1, BigInt(-2) * t);
    denom.set_coeff(2, BigInt(t) * t - 4);
    return lhs == denom.reciprocal().coeff(n);
}

inline bool t2_coincidence_holds(int n) {
    return r_coeffs(2, n)[static_cast<std::size_t>(n)] == binomial(2 * n, n);
}

// sum_{i+j=n} C(2i,i) C(2j,j) = 4^n for all n <= max_n.
inline VerificationReport check_eq1(int max_n) {
    VerificationReport rep = detail::identity_report("eq1");
    for (int n = 0; n <= max_n; ++n)
        detail::identity_case(rep, eq1_holds(n), "n=" + std::to_string(n));
    return rep;
}

// sum_{i+j=l} R_{t,i} R_{t,j} = ((t+2)^{l+1} - (t-2)^{l+1}) / 4 for l <= max_l,
// with exact divisibility by 4.
inline VerificationReport check_eq2(int t, int max_l) {
    VerificationReport rep = detail::identity_report("eq2 t=" + std::to_string(t));
    for (int l = 0; l <= max_l; ++l)
        detail::identity_case(rep, eq2_holds(t, l),
                              "t=" + std::to_string(t) + " l=" + std::to_string(l));
    return rep;
}

// (sum_i R_{t,i} X^i)^2 = 1 / (1 - 2tX + (t^2-4)X^2), coefficient-wise up to
// the given degree. Verified in squared form; no series square roots.
inline VerificationReport check_eq3(int t, int degree) {
    VerificationReport rep = detail::identity_report("eq3 t=" + std::to_string(t));
    TruncatedSeries r = TruncatedSeries::from_coeffs(r_coeffs(t, degree), degree);
    TruncatedSeries lhs = r * r;
    TruncatedSeries denom(degree >= 2 ? degree : 2);
    denom.set_coeff(0, 1);
    denom.set_coeff(1, BigInt(-2) * t);
    denom.set_coeff(2, BigInt(t) * t - 4);
    TruncatedSeries rhs = denom.reciprocal();
    for (int n = 0; n <= degree; ++n)
        detail::identity_case(rep, lhs.coeff(n) == rhs.coeff(n),
                              "t=" + std::to_string(t) + " n=" + std::to_string(n) + ": lhs=" +
                                  lhs.coeff(n).str() + " rhs=" + rhs.coeff(n).str());
    return rep;
}

// R_{2,n} = C(2n,n) for n <= max_n (the count identity only).
inline VerificationReport check_t2_coincidence(int max_n) {
    VerificationReport rep = detail::identity_report("t2");
    std::vector<BigInt> r = r_coeffs(2, max_n);
    for (int n = 0; n <= max_n; ++n) {
        BigInt rhs = binomial(2 * n, n);
        detail::identity_case(rep, r[static_cast<std::size_t>(n)] == rhs,
                              "n=" + std::to_string(n) + ": R=" + r[static_cast<std::size_t>(n)].str() +
                                  " C(2n,n)=" + rhs.str());
    }
    return rep;
}

} // namespace walkbij
