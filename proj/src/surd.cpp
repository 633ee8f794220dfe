#include "diolab/surd.hpp"

#include <cmath>

namespace diolab {

namespace {

// Exact sign of A + B*sqrt(d) for integers A, B and d >= 0 (d not assumed
// square-free).  Rationalizes: when the terms have opposite signs the sign is
// decided by comparing A^2 against B^2*d.
int two_term_sign(const Int& A, const Int& B, const Int& d) {
    if (B == 0 || d == 0) return sgn(A);
    if (A == 0) return sgn(B);
    const int sa = sgn(A), sb = sgn(B);
    if (sa == sb) return sa;
    const Int lhs = A * A;
    const Int rhs = B * B * d;
    const int c = cmp(lhs, rhs);
    if (c == 0) return 0;
    return c > 0 ? sa : sb;
}

}  // namespace

QuadraticSurd::QuadraticSurd(const Rat& value)
    : p_(value.get_num()), q_(0), d_(0), r_(value.get_den()) {
    canonicalize();
}

QuadraticSurd::QuadraticSurd(const Int& value) : p_(value), q_(0), d_(0), r_(1) {
    canonicalize();
}

QuadraticSurd::QuadraticSurd(Int p, Int q, Int d, Int r)
    : p_(std::move(p)), q_(std::move(q)), d_(std::move(d)), r_(std::move(r)) {
    canonicalize();
}

QuadraticSurd QuadraticSurd::quadratic_root(const Int& A, const Int& B, const Int& C,
                                            bool plus_branch) {
    require(A != 0, "quadratic root of a linear polynomial");
    Int disc = B * B - 4 * A * C;
    require(disc >= 0, "quadratic has no real roots");
    return QuadraticSurd(-B, Int(plus_branch ? 1 : -1), disc, 2 * A);
}

void QuadraticSurd::canonicalize() {
    require(r_ != 0, "surd with zero denominator");
    require(d_ >= 0, "surd with negative radicand");
    if (r_ < 0) {
        p_ = -p_;
        q_ = -q_;
        r_ = -r_;
    }
    if (d_ == 0 || q_ == 0) {
        q_ = 0;
        d_ = 0;
    } else if (d_ == 1) {
        p_ += q_;
        q_ = 0;
        d_ = 0;
    } else {
        const SquarefreeParts parts = factor_squarefree(d_);
        if (parts.complete && parts.squarefree == 1) {
            p_ += q_ * parts.root;
            q_ = 0;
            d_ = 0;
        } else if (parts.root != 1) {
            q_ *= parts.root;
            d_ = parts.squarefree;
        }
    }
    Int g = gcd_int(gcd_int(p_, q_), r_);
    if (g > 1) {
        p_ /= g;
        q_ /= g;
        r_ /= g;
    }
    refresh_bracket();
}

void QuadraticSurd::refresh_bracket() {
    if (q_ == 0) {
        const double v = rat(p_, r_).get_d();
        lo_ = std::nextafter(v, -1e308);
        hi_ = std::nextafter(v, 1e308);
        return;
    }
    const double pd = p_.get_d();
    const double qd = q_.get_d();
    const double dd = d_.get_d();
    const double rd = r_.get_d();
    if (std::isfinite(pd) && std::isfinite(qd) && std::isfinite(dd) && std::isfinite(rd) &&
        rd != 0.0) {
        const double sq = std::sqrt(dd);
        const double v = (pd + qd * sq) / rd;
        // Cancellation-safe: the error scales with the term magnitudes, not v.
        const double mag = (std::fabs(pd) + std::fabs(qd) * sq) / std::fabs(rd);
        const double err = mag * 0x1.0p-45 + 1e-290;
        if (std::isfinite(v) && std::isfinite(err)) {
            lo_ = v - err;
            hi_ = v + err;
            return;
        }
    }
    // Oversized operands: one high-precision evaluation.
    const size_t bits = mpz_sizeinbase(p_.get_mpz_t(), 2) + mpz_sizeinbase(q_.get_mpz_t(), 2) +
                        mpz_sizeinbase(d_.get_mpz_t(), 2) + mpz_sizeinbase(r_.get_mpz_t(), 2);
    mpf_class acc(0, static_cast<unsigned>(bits) + 96);
    add_to(acc);
    const double v = acc.get_d();
    const double err = std::fabs(v) * 0x1.0p-45 + 1e-290;
    lo_ = v - err;
    hi_ = v + err;
}

Rat QuadraticSurd::as_rat() const {
    require(is_rational(), "irrational surd read as rational");
    return rat(p_, r_);
}

int QuadraticSurd::sign() const {
    if (hi_ < 0) return -1;
    if (lo_ > 0) return 1;
    return two_term_sign(p_, q_, d_);
}

int QuadraticSurd::compare(const QuadraticSurd& other) const {
    if (hi_ < other.lo_) return -1;
    if (lo_ > other.hi_) return 1;
    // value - other = (A + B*sqrt(d1) + C*sqrt(d2)) / (r1*r2) with
    //   A = p1*r2 - p2*r1, B = q1*r2, C = -q2*r1.
    Int A = p_ * other.r_ - other.p_ * r_;
    Int B = q_ * other.r_;
    Int C = -other.q_ * r_;
    const Int& d1 = d_;
    const Int& d2 = other.d_;
    if (B == 0 || d1 == 0) return two_term_sign(A, C, d2);
    if (C == 0 || d2 == 0) return two_term_sign(A, B, d1);
    if (d1 == d2) return two_term_sign(A, B + C, d1);
    // Two distinct radicals: compare u = A + B*sqrt(d1) against w = -C*sqrt(d2).
    const int su = two_term_sign(A, B, d1);
    const int sw = sgn(-C);
    if (su != sw) return su > sw ? 1 : -1;
    if (su == 0) return 0;
    // Same nonzero sign: compare squares, u^2 - w^2 = (A^2+B^2*d1-C^2*d2) + 2AB*sqrt(d1).
    Int A2 = A * A + B * B * d1 - C * C * d2;
    Int B2 = 2 * A * B;
    const int st = two_term_sign(A2, B2, d1);
    return su > 0 ? st : -st;
}

int QuadraticSurd::compare(const Rat& other) const {
    // mpq_get_d truncates toward zero, so the exact value sits within one ulp.
    const double od = other.get_d();
    if (hi_ < std::nextafter(od, -1e308)) return -1;
    if (lo_ > std::nextafter(od, 1e308)) return 1;
    Int A = p_ * other.get_den() - other.get_num() * r_;
    Int B = q_ * other.get_den();
    return two_term_sign(A, B, d_);
}

Int QuadraticSurd::floor_scaled(unsigned bits) const {
    const Int scale = pow_int(Int(2), bits);
    if (q_ == 0) {
        Int out;
        mpz_fdiv_q(out.get_mpz_t(), Int(p_ * scale).get_mpz_t(), r_.get_mpz_t());
        return out;
    }
    // Candidate from a high-precision evaluation, then exact adjustment.
    const size_t opbits = mpz_sizeinbase(p_.get_mpz_t(), 2) + mpz_sizeinbase(q_.get_mpz_t(), 2) +
                          mpz_sizeinbase(d_.get_mpz_t(), 2) + mpz_sizeinbase(r_.get_mpz_t(), 2);
    mpf_class acc(0, static_cast<unsigned>(opbits + bits) + 96);
    add_to(acc);
    mpf_class scaled = acc * mpf_class(scale, static_cast<unsigned>(opbits + bits) + 96);
    mpf_class fl;
    mpf_floor(fl.get_mpf_t(), scaled.get_mpf_t());
    Int cand;
    mpz_set_f(cand.get_mpz_t(), fl.get_mpf_t());
    // Exact check: cand <= value*2^bits < cand+1.
    while (compare(rat(cand, scale)) < 0) cand -= 1;
    while (compare(rat(cand + 1, scale)) >= 0) cand += 1;
    return cand;
}

void QuadraticSurd::add_to(mpf_class& acc) const {
    const auto prec = acc.get_prec();
    mpf_class term(p_, prec);
    if (q_ != 0) {
        mpf_class root(d_, prec);
        mpf_sqrt(root.get_mpf_t(), root.get_mpf_t());
        term += mpf_class(q_, prec) * root;
    }
    term /= mpf_class(r_, prec);
    acc += term;
}

std::string QuadraticSurd::str() const {
    if (is_rational()) return rat_str(as_rat());
    std::string s = "(" + p_.get_str();
    s += (q_ < 0 ? "-" : "+");
    Int absq = q_ < 0 ? Int(-q_) : q_;
    if (absq != 1) s += absq.get_str() + "*";
    s += "sqrt(" + d_.get_str() + "))";
    if (r_ != 1) s += "/" + r_.get_str();
    return s;
}

QuadraticSurd min(const QuadraticSurd& a, const QuadraticSurd& b) {
    return a.compare(b) <= 0 ? a : b;
}

QuadraticSurd max(const QuadraticSurd& a, const QuadraticSurd& b) {
    return a.compare(b) >= 0 ? a : b;
}

Rat rational_between(const QuadraticSurd& lo, const QuadraticSurd& hi) {
    require(lo.compare(hi) < 0, "rational_between on empty interval");
    for (unsigned bits = 8; bits <= 4096; bits += 8) {
        const Int scale = pow_int(Int(2), bits);
        const Rat cand = rat(lo.floor_scaled(bits) + 1, scale);
        if (hi.compare(cand) > 0) return cand;  // lo < cand holds by construction
    }
    fail("rational_between exhausted precision");
}

}  // namespace diolab
