#include "diolab/sequences.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace diolab {

IntSequence IntSequence::geometric(Int base) {
    require(base >= 2, "geometric base must be >= 2");
    IntSequence s;
    s.kind_ = SeqKind::geometric;
    s.base_ = std::move(base);
    s.distinct_ = true;
    return s;
}

IntSequence IntSequence::polynomial(std::vector<Int> coeffs) {
    require(!coeffs.empty(), "polynomial needs coefficients");
    require(coeffs.back() > 0, "polynomial leading coefficient must be positive");
    IntSequence s;
    s.kind_ = SeqKind::polynomial;
    s.coeffs_ = std::move(coeffs);
    s.distinct_ = true;  // verified on prefixes by hypothesis checks
    return s;
}

IntSequence IntSequence::smooth(std::vector<Int> primes, std::size_t count) {
    auto enumeration = enumerate_smooth(primes, count);
    IntSequence s;
    s.kind_ = SeqKind::smooth;
    s.primes_ = std::move(primes);
    s.terms_ = std::move(enumeration.values);
    s.distinct_ = true;
    return s;
}

IntSequence IntSequence::explicit_terms(std::vector<Int> terms, bool distinct) {
    require(!terms.empty(), "explicit sequence needs terms");
    for (const Int& t : terms) require(t > 0, "sequence terms must be positive");
    if (distinct) {
        std::vector<Int> sorted = terms;
        std::sort(sorted.begin(), sorted.end());
        const bool repeats = std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end();
        require(!repeats, "sequence flagged distinct but has repeated terms");
    }
    IntSequence s;
    s.kind_ = SeqKind::explicit_list;
    s.terms_ = std::move(terms);
    s.distinct_ = distinct;
    return s;
}

Int IntSequence::term(std::size_t n) const {
    require(n >= 1, "sequence index starts at 1");
    switch (kind_) {
        case SeqKind::geometric:
            return pow_int(base_, n);
        case SeqKind::polynomial: {
            Int value = 0;
            for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
                value = value * static_cast<long>(n) + *it;
            require(value > 0, "polynomial term is not positive at n=" + std::to_string(n));
            return value;
        }
        case SeqKind::smooth:
        case SeqKind::explicit_list:
            require(n <= terms_.size(), "index " + std::to_string(n) +
                                            " beyond enumerated horizon " +
                                            std::to_string(terms_.size()));
            return terms_[n - 1];
    }
    fail("unreachable sequence kind");
}

std::size_t IntSequence::horizon() const {
    if (kind_ == SeqKind::smooth || kind_ == SeqKind::explicit_list) return terms_.size();
    return std::numeric_limits<std::size_t>::max();
}

const Int& IntSequence::base() const {
    require(kind_ == SeqKind::geometric, "base() on non-geometric sequence");
    return base_;
}

const std::vector<Int>& IntSequence::coeffs() const {
    require(kind_ == SeqKind::polynomial, "coeffs() on non-polynomial sequence");
    return coeffs_;
}

const std::vector<Int>& IntSequence::primes() const {
    require(kind_ == SeqKind::smooth, "primes() on non-smooth sequence");
    return primes_;
}

const std::vector<Int>& IntSequence::terms() const {
    require(kind_ == SeqKind::smooth || kind_ == SeqKind::explicit_list,
            "terms() on lazily generated sequence");
    return terms_;
}

SmoothEnumeration enumerate_smooth(const std::vector<Int>& primes, std::size_t count) {
    require(!primes.empty(), "smooth enumeration needs at least one prime");
    require(count >= 1, "smooth enumeration needs a positive count");
    for (const Int& p : primes) require(is_prime(p), "non-prime generator " + int_str(p));
    {
        std::vector<Int> sorted = primes;
        std::sort(sorted.begin(), sorted.end());
        require(std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end(),
                "repeated prime generator");
    }

    // k-pointer merge: values[next[i]] * primes[i] are the merge candidates.
    std::vector<Int> values{Int(1)};
    values.reserve(count);
    std::vector<std::size_t> next(primes.size(), 0);
    while (values.size() < count) {
        Int best = values[next[0]] * primes[0];
        for (std::size_t i = 1; i < primes.size(); ++i) {
            Int cand = values[next[i]] * primes[i];
            if (cand < best) best = cand;
        }
        for (std::size_t i = 0; i < primes.size(); ++i) {
            if (values[next[i]] * primes[i] == best) ++next[i];
        }
        values.push_back(best);
    }

    SmoothEnumeration out;
    out.growth.k = static_cast<unsigned>(primes.size());
    out.growth.c_min = std::numeric_limits<double>::infinity();
    for (std::size_t n = 2; n <= values.size(); ++n) {
        const double c = log_int(values[n - 1]) /
                         std::pow(static_cast<double>(n), 1.0 / out.growth.k);
        if (c < out.growth.c_min) {
            out.growth.c_min = c;
            out.growth.argmin = n;
        }
    }
    if (values.size() < 2) out.growth.c_min = 0.0;
    out.values = std::move(values);
    return out;
}

LacunarityReport is_lacunary(const IntSequence& seq, const Rat& K, std::size_t N) {
    require(K > 1, "lacunarity constant must exceed 1");
    require(N >= 2, "lacunarity check needs at least two terms");
    LacunarityReport report;
    Int prev = seq.term(1);
    for (std::size_t n = 2; n <= N; ++n) {
        Int cur = seq.term(n);
        Rat ratio = rat(cur, prev);
        if (n == 2 || ratio < report.min_ratio) report.min_ratio = ratio;
        if (report.lacunary && ratio < K) {
            report.lacunary = false;
            report.first_violation = n - 1;
        }
        prev = std::move(cur);
    }
    return report;
}

double PsiValue::value() const {
    if (exact) return to_double(*exact);
    return std::exp(log_value);
}

ApproxFunction ApproxFunction::power_decay(Rat c, Rat alpha) {
    require(c > 0, "power decay needs c > 0");
    ApproxFunction f;
    f.kind_ = Kind::power;
    f.c_ = std::move(c);
    f.alpha_ = std::move(alpha);
    return f;
}

ApproxFunction ApproxFunction::exp_decay(Rat c, Int base, Rat tau) {
    require(c > 0, "exponential decay needs c > 0");
    require(base >= 2, "exponential decay base must be >= 2");
    require(tau > 0, "exponential decay rate must be positive");
    ApproxFunction f;
    f.kind_ = Kind::exp;
    f.c_ = std::move(c);
    f.base_ = std::move(base);
    f.tau_ = std::move(tau);
    return f;
}

ApproxFunction ApproxFunction::product(std::vector<ApproxFunction> parts) {
    require(!parts.empty(), "product of approximating functions needs factors");
    ApproxFunction f;
    f.kind_ = Kind::product;
    f.parts_ = std::move(parts);
    return f;
}

ApproxFunction ApproxFunction::explicit_values(std::vector<Rat> values) {
    require(!values.empty(), "explicit psi needs values");
    for (const Rat& v : values)
        require(v > 0 && v < 1, "explicit psi values must lie in (0,1)");
    ApproxFunction f;
    f.kind_ = Kind::explicit_list;
    f.values_ = std::move(values);
    return f;
}

namespace {

// Raw evaluation without the (0,1) range gate; product recursion uses it.
PsiValue eval_raw(const ApproxFunction& f, std::size_t n) {
    PsiValue v;
    switch (f.kind()) {
        case ApproxFunction::Kind::power: {
            v.log_value = log_rat(f.c()) - to_double(f.alpha()) * std::log(double(n));
            v.exact = rat_pow_exact(Rat(static_cast<long>(n)), -f.alpha());
            if (v.exact) *v.exact *= f.c();
            return v;
        }
        case ApproxFunction::Kind::exp: {
            const Rat exponent = f.tau() * static_cast<long>(n);
            v.log_value = log_rat(f.c()) - to_double(exponent) * log_int(f.exp_base());
            v.exact = rat_pow_exact(Rat(f.exp_base()), -exponent);
            if (v.exact) *v.exact *= f.c();
            return v;
        }
        case ApproxFunction::Kind::product: {
            v.exact = Rat(1);
            v.log_value = 0.0;
            for (const auto& part : f.parts()) {
                PsiValue pv = eval_raw(part, n);
                v.log_value += pv.log_value;
                if (v.exact && pv.exact)
                    *v.exact *= *pv.exact;
                else
                    v.exact.reset();
            }
            return v;
        }
        case ApproxFunction::Kind::explicit_list: {
            require(n >= 1 && n <= f.values().size(),
                    "psi index " + std::to_string(n) + " beyond explicit horizon " +
                        std::to_string(f.values().size()));
            v.exact = f.values()[n - 1];
            v.log_value = log_rat(*v.exact);
            return v;
        }
    }
    fail("unreachable psi kind");
}

}  // namespace

PsiValue ApproxFunction::eval(std::size_t n) const {
    require(n >= 1, "psi index starts at 1");
    PsiValue v = eval_raw(*this, n);
    if (v.exact) {
        require(*v.exact > 0 && *v.exact < 1,
                "psi(" + std::to_string(n) + ") = " + rat_str(*v.exact) + " outside (0,1)");
    } else {
        require(std::isfinite(v.log_value) && v.log_value < 0,
                "psi(" + std::to_string(n) + ") outside (0,1)");
    }
    return v;
}

ApproxFunction::Shape ApproxFunction::shape() const {
    Shape s;
    switch (kind_) {
        case Kind::power:
            s.recognized = true;
            s.alpha = alpha_;
            s.log_c = log_rat(c_);
            return s;
        case Kind::exp:
            s.recognized = true;
            s.rho = to_double(tau_) * log_int(base_);
            s.has_exp = true;
            s.log_c = log_rat(c_);
            return s;
        case Kind::product: {
            s.recognized = true;
            s.alpha = Rat(0);
            for (const auto& part : parts_) {
                Shape ps = part.shape();
                if (!ps.recognized) {
                    s.recognized = false;
                    return s;
                }
                s.alpha += ps.alpha;
                s.rho += ps.rho;
                s.log_c += ps.log_c;
                s.has_exp = s.has_exp || ps.has_exp;
            }
            return s;
        }
        case Kind::explicit_list:
            return s;
    }
    fail("unreachable psi kind");
}

Int gcd_term(const PairSystem& sys, std::size_t n) { return sys.g(n); }

TauEstimate tau_estimate(const ApproxFunction& psi, const Int& b, std::size_t n0,
                         std::size_t n1) {
    require(b >= 2, "tau estimate base must be >= 2");
    require(n0 >= 1 && n0 <= n1, "empty tau window");
    TauEstimate est;
    est.value = std::numeric_limits<double>::infinity();
    const double logb = log_int(b);
    bool all_exact = psi.kind() == ApproxFunction::Kind::exp && psi.exp_base() == b &&
                     psi.c() == 1;
    for (std::size_t n = n0; n <= n1; ++n) {
        const PsiValue v = psi.eval(n);
        const double val = -v.log_value / (static_cast<double>(n) * logb);
        if (val < est.value) {
            est.value = val;
            est.argmin = n;
        }
    }
    if (all_exact) {
        est.exact = psi.tau();
        est.value = to_double(psi.tau());
        est.argmin = n0;
    }
    return est;
}

}  // namespace diolab
