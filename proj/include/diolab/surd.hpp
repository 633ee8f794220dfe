// Exact real quadratic surds (p + q*sqrt(d))/r with integer p, q, r and
// non-negative integer d.  This is the endpoint field for every interval set:
// roots of integer quadratics live here, rationals embed with q = 0, and
// comparisons are decided exactly (sign computations on at most two radicals),
// with a cached double bracket as a fast path.
#pragma once

#include <string>

#include "diolab/numeric.hpp"

namespace diolab {

class QuadraticSurd {
public:
    QuadraticSurd() : QuadraticSurd(Rat(0)) {}
    explicit QuadraticSurd(const Rat& value);
    explicit QuadraticSurd(const Int& value);

    // (p + q*sqrt(d))/r, r != 0, d >= 0.  Canonicalizes: r > 0, gcd(p,q,r)=1,
    // square factors of d folded into q, q == 0 forces d == 0.
    QuadraticSurd(Int p, Int q, Int d, Int r);

    // The two roots of A*x^2 + B*x + C (A != 0, integer coefficients,
    // discriminant >= 0): (-B +- sqrt(B^2-4AC)) / (2A).
    static QuadraticSurd quadratic_root(const Int& A, const Int& B, const Int& C,
                                        bool plus_branch);

    const Int& p() const { return p_; }
    const Int& q() const { return q_; }
    const Int& d() const { return d_; }
    const Int& r() const { return r_; }

    bool is_rational() const { return q_ == 0; }
    Rat as_rat() const;  // requires is_rational()

    int sign() const;
    int compare(const QuadraticSurd& other) const;
    int compare(const Rat& other) const;

    bool operator<(const QuadraticSurd& o) const { return compare(o) < 0; }
    bool operator<=(const QuadraticSurd& o) const { return compare(o) <= 0; }
    bool operator==(const QuadraticSurd& o) const { return compare(o) == 0; }

    // floor(value * 2^bits), exact.
    Int floor_scaled(unsigned bits) const;

    // Outward double bracket: lo() <= value <= hi(), usually a few ulps wide.
    double lo() const { return lo_; }
    double hi() const { return hi_; }
    double approx() const { return 0.5 * (lo_ + hi_); }

    // Append the value to an mpf accumulator at the accumulator's precision.
    void add_to(mpf_class& acc) const;

    std::string str() const;  // "p/r" or "(p+q*sqrt(d))/r"

private:
    void canonicalize();
    void refresh_bracket();

    Int p_, q_, d_, r_;
    double lo_ = 0.0, hi_ = 0.0;
};

QuadraticSurd min(const QuadraticSurd& a, const QuadraticSurd& b);
QuadraticSurd max(const QuadraticSurd& a, const QuadraticSurd& b);

// Some rational strictly between lo and hi (requires lo < hi).
Rat rational_between(const QuadraticSurd& lo, const QuadraticSurd& hi);

}  // namespace diolab
