#include "diolab/numeric.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

namespace diolab {

void fail(const std::string& msg) { throw error(msg); }

Rat rat(const Int& num, const Int& den) {
    require(den != 0, "rational with zero denominator");
    Rat q(num, den);
    q.canonicalize();
    return q;
}

Rat rat(long num, long den) { return rat(Int(num), Int(den)); }

Rat parse_rat(const std::string& text) {
    require(!text.empty(), "empty rational literal");
    require(text.find('.') == std::string::npos && text.find('e') == std::string::npos &&
                text.find('E') == std::string::npos,
            "rational literals must be integers or p/q, got '" + text + "'");
    const auto slash = text.find('/');
    try {
        if (slash == std::string::npos) return rat(Int(text), Int(1));
        return rat(Int(text.substr(0, slash)), Int(text.substr(slash + 1)));
    } catch (const std::invalid_argument&) {
        fail("malformed rational literal '" + text + "'");
    }
}

std::string rat_str(const Rat& x) {
    if (x.get_den() == 1) return x.get_num().get_str();
    return x.get_num().get_str() + "/" + x.get_den().get_str();
}

std::string int_str(const Int& x) { return x.get_str(); }

Rat rat_from_double(double x) {
    require(std::isfinite(x), "non-finite double cannot become a rational");
    Rat q;
    mpq_set_d(q.get_mpq_t(), x);
    return q;
}

Int pow_int(const Int& base, unsigned long e) {
    Int out;
    mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), e);
    return out;
}

Rat pow_rat(const Rat& base, long e) {
    if (e == 0) return Rat(1);
    require(base != 0 || e > 0, "0 raised to a negative power");
    const unsigned long mag = static_cast<unsigned long>(e < 0 ? -e : e);
    Int num = pow_int(base.get_num(), mag);
    Int den = pow_int(base.get_den(), mag);
    return e > 0 ? rat(num, den) : rat(den, num);
}

Int floor_rat(const Rat& x) {
    Int q;
    mpz_fdiv_q(q.get_mpz_t(), x.get_num().get_mpz_t(), x.get_den().get_mpz_t());
    return q;
}

Int ceil_rat(const Rat& x) {
    Int q;
    mpz_cdiv_q(q.get_mpz_t(), x.get_num().get_mpz_t(), x.get_den().get_mpz_t());
    return q;
}

Int strict_floor(const Rat& x) {
    if (x.get_den() == 1) return Int(x.get_num() - 1);
    return floor_rat(x);
}

Int gcd_int(const Int& a, const Int& b) {
    Int g;
    mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return g;
}

bool is_perfect_square(const Int& n) {
    return n >= 0 && mpz_perfect_square_p(n.get_mpz_t()) != 0;
}

Int sqrt_floor(const Int& n) {
    require(n >= 0, "sqrt of negative integer");
    Int r;
    mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
    return r;
}

bool is_prime(const Int& n) {
    if (n < 2) return false;
    return mpz_probab_prime_p(n.get_mpz_t(), 40) != 0;
}

namespace {

const std::vector<unsigned long>& small_primes() {
    static const std::vector<unsigned long> primes = [] {
        constexpr unsigned long limit = 4096;
        std::vector<bool> sieve(limit + 1, true);
        std::vector<unsigned long> out;
        for (unsigned long i = 2; i <= limit; ++i) {
            if (!sieve[i]) continue;
            out.push_back(i);
            for (unsigned long j = i * i; j <= limit; j += i) sieve[j] = false;
        }
        return out;
    }();
    return primes;
}

// Brent-cycle Pollard rho; n odd composite, no small factors left.
Int rho_factor(const Int& n, unsigned long seed) {
    Int y = Int(seed % 1000 + 2), c = Int(seed % 97 + 1), m = 128;
    Int g = 1, r = 1, q = 1, x, ys;
    while (g == 1) {
        x = y;
        for (Int i = 0; i < r; ++i) y = (y * y + c) % n;
        Int k = 0;
        while (k < r && g == 1) {
            ys = y;
            Int bound = m < r - k ? m : r - k;
            for (Int i = 0; i < bound; ++i) {
                y = (y * y + c) % n;
                Int d = x - y;
                if (d < 0) d = -d;
                q = q * d % n;
            }
            g = gcd_int(q, n);
            k += bound;
        }
        r *= 2;
    }
    if (g == n) {
        g = 1;
        while (g == 1) {
            ys = (ys * ys + c) % n;
            Int d = x - ys;
            if (d < 0) d = -d;
            g = gcd_int(d, n);
        }
    }
    return g;
}

void factor_into(const Int& n, std::vector<Int>& primes_out) {
    if (n == 1) return;
    if (is_prime(n)) {
        primes_out.push_back(n);
        return;
    }
    Int f = n;
    for (unsigned long seed = 1; f == n && seed < 32; ++seed) f = rho_factor(n, seed);
    require(f != n && f != 1, "factorization stalled");
    factor_into(f, primes_out);
    factor_into(n / f, primes_out);
}

}  // namespace

SquarefreeParts factor_squarefree(const Int& d) {
    require(d >= 0, "squarefree split of negative integer");
    SquarefreeParts out{Int(1), Int(1), true};
    if (d <= 1) {
        out.squarefree = d;
        return out;
    }
    Int c = d;
    for (unsigned long p : small_primes()) {
        if (Int(p) * p > c) break;
        unsigned long e = 0;
        while (mpz_divisible_ui_p(c.get_mpz_t(), p)) {
            mpz_divexact_ui(c.get_mpz_t(), c.get_mpz_t(), p);
            ++e;
        }
        if (e == 0) continue;
        if (e % 2 == 1) out.squarefree *= p;
        out.root *= pow_int(Int(p), e / 2);
    }
    if (c == 1) return out;
    if (is_prime(c)) {
        out.squarefree *= c;
        return out;
    }
    if (is_perfect_square(c)) {
        out.root *= sqrt_floor(c);
        return out;
    }
    if (mpz_sizeinbase(c.get_mpz_t(), 2) <= 110) {
        std::vector<Int> primes;
        factor_into(c, primes);
        std::sort(primes.begin(), primes.end());
        for (size_t i = 0; i < primes.size();) {
            size_t j = i;
            while (j < primes.size() && primes[j] == primes[i]) ++j;
            const size_t e = j - i;
            if (e % 2 == 1) out.squarefree *= primes[i];
            out.root *= pow_int(primes[i], static_cast<unsigned long>(e / 2));
            i = j;
        }
        return out;
    }
    out.squarefree *= c;
    out.complete = false;
    return out;
}

std::optional<Rat> rat_root(const Rat& x, unsigned long q) {
    require(q >= 1, "0th root");
    require(x >= 0, "even roots of negatives are not real");
    if (q == 1) return x;
    Int num, den;
    if (mpz_root(num.get_mpz_t(), x.get_num().get_mpz_t(), q) == 0) return std::nullopt;
    if (mpz_root(den.get_mpz_t(), x.get_den().get_mpz_t(), q) == 0) return std::nullopt;
    return rat(num, den);
}

std::optional<Rat> rat_pow_exact(const Rat& x, const Rat& e) {
    require(x > 0, "exact power of non-positive base");
    const Int& p = e.get_num();
    const Int& q = e.get_den();
    if (!q.fits_ulong_p() || !p.fits_slong_p()) return std::nullopt;
    auto root = rat_root(x, q.get_ui());
    if (!root) return std::nullopt;
    return pow_rat(*root, p.get_si());
}

double to_double(const Rat& x) { return x.get_d(); }

double log_int(const Int& n) {
    require(n > 0, "log of non-positive integer");
    long exp2 = 0;
    const double mant = mpz_get_d_2exp(&exp2, n.get_mpz_t());
    return std::log(mant) + static_cast<double>(exp2) * std::log(2.0);
}

double log_rat(const Rat& x) {
    require(x > 0, "log of non-positive rational");
    return log_int(x.get_num()) - log_int(x.get_den());
}

namespace {
// 3.14159265358979323846264338327950288 bracketed by rationals from the
// decimal expansion: lo truncates, hi rounds the last digit up.
const Rat kPiLo = rat(Int("314159265358979323846"), Int("100000000000000000000"));
const Rat kPiHi = rat(Int("314159265358979323847"), Int("100000000000000000000"));
}  // namespace

const Rat& pi_lo() { return kPiLo; }
const Rat& pi_hi() { return kPiHi; }

}  // namespace diolab
