// Arbitrary-precision integer/rational helpers shared by every module.
// Int and Rat are GMP classes; everything that must be exact stays in them,
// and every float that leaves this layer is documented as an approximation.
#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>

namespace diolab {

using Int = mpz_class;
using Rat = mpq_class;

// Single error type for contract violations (bad arguments, range violations,
// cost-guard trips).  The CLI maps it to the usage/config exit code.
class error : public std::runtime_error {
public:
    explicit error(const std::string& msg) : std::runtime_error(msg) {}
};

[[noreturn]] void fail(const std::string& msg);

inline void require(bool ok, const std::string& msg) {
    if (!ok) fail(msg);
}

// --- construction / parsing -------------------------------------------------

// num/den reduced to lowest terms, den > 0.  den == 0 is an error.
Rat rat(const Int& num, const Int& den);
Rat rat(long num, long den);

// Accepts "p", "-p", "p/q" with optional sign on p.  Decimal points and
// exponents are rejected: callers that need exactness never get a float here.
Rat parse_rat(const std::string& text);

// Canonical "p/q" (or "p" when q == 1) rendering.
std::string rat_str(const Rat& x);
std::string int_str(const Int& x);

// Exact conversion: every finite double is a binary rational.
Rat rat_from_double(double x);

// --- integer utilities ------------------------------------------------------

Int pow_int(const Int& base, unsigned long e);
Rat pow_rat(const Rat& base, long e);  // negative exponents allowed, base != 0

Int floor_rat(const Rat& x);
Int ceil_rat(const Rat& x);

// Largest integer m with m < x (strict).  Used for strict-inequality counts.
Int strict_floor(const Rat& x);

Int gcd_int(const Int& a, const Int& b);

bool is_perfect_square(const Int& n);
Int sqrt_floor(const Int& n);  // floor(sqrt(n)), n >= 0

// Deterministic enough for our sizes: BPSW + extra Miller-Rabin rounds.
bool is_prime(const Int& n);

// d = squarefree * root^2 with squarefree square-free whenever `complete`.
// Trial division, perfect-square detection, then Pollard rho on cofactors up
// to ~2^110; a larger unfactored cofactor is left in `squarefree` with
// complete == false (orderings that use d stay exact either way).
struct SquarefreeParts {
    Int squarefree;
    Int root;
    bool complete = true;
};
SquarefreeParts factor_squarefree(const Int& d);

// x^(1/q) as an exact rational if one exists (x >= 0, q >= 1).
std::optional<Rat> rat_root(const Rat& x, unsigned long q);

// x^e for rational e = p/q, exact when x is a perfect q-th power; x > 0.
std::optional<Rat> rat_pow_exact(const Rat& x, const Rat& e);

// --- float views ------------------------------------------------------------

double to_double(const Rat& x);

// Natural logs that stay finite for huge operands (mantissa/exponent split).
double log_int(const Int& n);   // n > 0
double log_rat(const Rat& x);   // x > 0

// Rational brackets of pi, tight to ~1e-17: pi_lo() < pi < pi_hi().
const Rat& pi_lo();
const Rat& pi_hi();

}  // namespace diolab
