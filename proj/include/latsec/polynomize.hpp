#pragma once

#include "latsec/interval.hpp"
#include "latsec/qexp.hpp"
#include "latsec/special.hpp"

#include <optional>
#include <vector>

namespace latsec {
namespace polynomize {

struct UnsupportedLevel : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct NoExactFit : std::runtime_error {
    NoExactFit(const std::string& msg, long failing_qpow)
        : std::runtime_error(msg), first_failing_qpow(failing_qpow) {}
    long first_failing_qpow;
};

// Levels for which g_ell is defined here.  The strict iff-criterion applies
// to the primes, the one-directional sufficient criterion to the composites.
bool level_supported(long ell);
bool level_prime_mode(long ell);

struct EllConstants {
    mpq_class D;      // 24 d(ell) / prod_{p|ell} (p+1)
    mpq_class alpha;  // D / d(ell)
};
EllConstants d_ell_const(long ell);

// Exact q-expansion of g_ell; leading term is q^1 with coefficient 1.
QExpansion g_ell_series(long ell, long order_qpow);

// Rigorous enclosure of g_ell(y) through eta evaluations.
Interval g_ell_value(long ell, const Interval& y, const special::EvalOptions& opt = {});

// Enclosure of x* = g_ell(1/sqrt(ell)).
Interval g_ell_symmetry_value(long ell, const special::EvalOptions& opt = {});

// Polynomial with exact rational coefficients c0..cN in ascending order.
using RatPoly = std::vector<mpq_class>;

RatPoly poly_derivative(const RatPoly& p);
mpq_class poly_eval(const RatPoly& p, const mpq_class& x);
Interval poly_eval(const RatPoly& p, const Interval& x);
long poly_degree(const RatPoly& p);  // -1 for the zero polynomial

// Sturm chain of p; count/isolate real roots in ]a, b].
std::vector<RatPoly> sturm_chain(const RatPoly& p);
int sturm_count(const std::vector<RatPoly>& chain, const mpq_class& a, const mpq_class& b);
// Disjoint isolating intervals ]a_i, b_i], each containing exactly one root
// of the squarefree part of p, refined to width <= width.
std::vector<std::pair<mpq_class, mpq_class>> isolate_roots(const RatPoly& p, const mpq_class& a,
                                                           const mpq_class& b,
                                                           const mpq_class& width);

struct SecrecyPolynomial {
    long ell = 0;
    long k = 0;
    RatPoly coeffs;
};

// Exact triangular fit of theta = Theta_{C^ell}^k * sum_i c_i g_ell^i,
// using that g_ell = q + O(q^2).  Throws NoExactFit when no polynomial of
// degree <= max_degree reproduces theta through its available order.
SecrecyPolynomial fit_polynomial(const QExpansion& theta, long ell, long k, long max_degree);

enum class Outcome { Holds, Fails, Inconclusive };
enum class CheckMode { ExactIff, Sufficient };

struct CriticalPoint {
    mpq_class lo, hi;     // isolating interval for the root of P'
    int comparison;       // +1: P > P(x*) certified, -1: P < P(x*) certified, 0: unresolved
};

struct Verdict {
    Outcome outcome = Outcome::Inconclusive;
    Interval x_star{};
    std::vector<CriticalPoint> critical_points;
    std::optional<mpq_class> witness;   // point with certified P(witness) < P(x*)
    std::optional<Interval> margin;     // min certified gap P(.) - P(x*) over checks
    std::string note;

    nlohmann::json to_json() const;
};

// Decides whether P(x) > P(x*) (ExactIff) resp. >= (Sufficient) holds for
// all x in ]0, x*[ with x* = g_ell(1/sqrt(ell)).
Verdict check_conjecture(const SecrecyPolynomial& P, CheckMode mode,
                         const special::EvalOptions& opt = {});

}  // namespace polynomize
}  // namespace latsec
