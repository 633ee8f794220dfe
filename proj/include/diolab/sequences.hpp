// Integer denominator sequences, approximating functions psi, and the paired
// system (A, B, psi[, phi]) that the set builders, counters and dimension
// formulas consume.  Terms are arbitrary precision; psi evaluations carry an
// exact rational whenever one exists plus an always-finite natural log.
#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "diolab/numeric.hpp"

namespace diolab {

enum class SeqKind { geometric, polynomial, smooth, explicit_list };

class IntSequence {
public:
    // a_n = base^n (n >= 1), base >= 2.
    static IntSequence geometric(Int base);
    // a_n = p(n) with ascending coefficients and positive leading coefficient;
    // terms are checked positive as they are produced.
    static IntSequence polynomial(std::vector<Int> coeffs);
    // Ascending enumeration of the multiplicative semigroup generated by the
    // given primes, starting at 1, enumerated eagerly to `count` terms.
    static IntSequence smooth(std::vector<Int> primes, std::size_t count = 4096);
    static IntSequence explicit_terms(std::vector<Int> terms, bool distinct);

    SeqKind kind() const { return kind_; }
    bool distinct() const { return distinct_; }

    Int term(std::size_t n) const;  // n >= 1

    // Largest n this sequence can produce (unbounded kinds return SIZE_MAX).
    std::size_t horizon() const;

    const Int& base() const;                 // geometric
    const std::vector<Int>& coeffs() const;  // polynomial
    const std::vector<Int>& primes() const;  // smooth
    const std::vector<Int>& terms() const;   // smooth / explicit

private:
    IntSequence() = default;
    SeqKind kind_ = SeqKind::explicit_list;
    bool distinct_ = true;
    Int base_;
    std::vector<Int> coeffs_;
    std::vector<Int> primes_;
    std::vector<Int> terms_;
};

// Growth constant report for smooth enumerations: empirical only, no
// threshold asserted.  k is the number of generating primes.
struct GrowthReport {
    unsigned k = 1;
    double c_min = 0.0;      // min over 2 <= n <= count of log(a_n) / n^(1/k)
    std::size_t argmin = 0;  // index attaining the minimum
};

struct SmoothEnumeration {
    std::vector<Int> values;
    GrowthReport growth;
};
SmoothEnumeration enumerate_smooth(const std::vector<Int>& primes, std::size_t count);

struct LacunarityReport {
    bool lacunary = true;                        // a_{n+1}/a_n >= K on the prefix
    std::optional<std::size_t> first_violation;  // least violating n
    Rat min_ratio;                               // min a_{n+1}/a_n over the prefix
};
// Exact ratio checks over n in [1, N]; K > 1.
LacunarityReport is_lacunary(const IntSequence& seq, const Rat& K, std::size_t N);

struct PsiValue {
    std::optional<Rat> exact;  // present whenever the value is rational by construction
    double log_value = 0.0;    // natural log, finite even when the value underflows
    double value() const;
};

class ApproxFunction {
public:
    enum class Kind { power, exp, product, explicit_list };

    static ApproxFunction power_decay(Rat c, Rat alpha);        // c * n^-alpha
    static ApproxFunction exp_decay(Rat c, Int base, Rat tau);  // c * base^(-tau n), base >= 2
    static ApproxFunction product(std::vector<ApproxFunction> parts);
    static ApproxFunction explicit_values(std::vector<Rat> values);  // each in (0,1)

    Kind kind() const { return kind_; }

    // Checks 0 < psi(n) < 1; violations are errors naming n.
    PsiValue eval(std::size_t n) const;

    // Recognized analytic shape psi(n) = C * n^-alpha * e^(-rho n); rho and
    // log C as doubles, alpha exact.  Not recognized for explicit lists.
    struct Shape {
        bool recognized = false;
        Rat alpha;          // total power-decay exponent
        double rho = 0.0;   // total exponential rate, as a double
        double log_c = 0.0;
        bool has_exp = false;
    };
    Shape shape() const;

    const Rat& c() const { return c_; }
    const Rat& alpha() const { return alpha_; }
    const Rat& tau() const { return tau_; }
    const Int& exp_base() const { return base_; }
    const std::vector<ApproxFunction>& parts() const { return parts_; }
    const std::vector<Rat>& values() const { return values_; }

private:
    ApproxFunction() = default;
    Kind kind_ = Kind::explicit_list;
    Rat c_, alpha_, tau_;
    Int base_;
    std::vector<ApproxFunction> parts_;
    std::vector<Rat> values_;
};

struct PairSystem {
    IntSequence A, B;
    ApproxFunction psi;
    std::optional<ApproxFunction> phi;  // second radius for simultaneous systems

    Int a(std::size_t n) const { return A.term(n); }
    Int b(std::size_t n) const { return B.term(n); }
    Int g(std::size_t n) const { return gcd_int(A.term(n), B.term(n)); }
};

// gcd of the paired terms at index n.
Int gcd_term(const PairSystem& sys, std::size_t n);

struct TauEstimate {
    double value = 0.0;        // inf over the window of log_b(1/psi(n)) / n
    std::optional<Rat> exact;  // set when every window value is exactly tau
    std::size_t argmin = 0;
};
// Finite-window estimate of liminf_n log_b(1/psi(n))/n; exact for pure
// exponential decay in the matching base with c == 1.
TauEstimate tau_estimate(const ApproxFunction& psi, const Int& b, std::size_t n0,
                         std::size_t n1);

}  // namespace diolab
