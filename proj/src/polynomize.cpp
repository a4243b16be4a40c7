#include "latsec/polynomize.hpp"

#include "latsec/lattice.hpp"

#include <algorithm>

namespace latsec {
namespace polynomize {

namespace {
const std::vector<long> kPrimeLevels = {3, 5, 7, 11, 23};
const std::vector<long> kCompositeLevels = {6, 14, 15};
}  // namespace

bool level_prime_mode(long ell) {
    return std::find(kPrimeLevels.begin(), kPrimeLevels.end(), ell) != kPrimeLevels.end();
}

bool level_supported(long ell) {
    return level_prime_mode(ell) ||
           std::find(kCompositeLevels.begin(), kCompositeLevels.end(), ell) !=
               kCompositeLevels.end();
}

EllConstants d_ell_const(long ell) {
    if (ell < 2) throw std::invalid_argument("d_ell_const: ell must be >= 2");
    long nd = static_cast<long>(divisors(ell).size());
    mpq_class denom = 1;
    long m = ell;
    for (long p = 2; p * p <= m; ++p) {
        if (m % p) continue;
        denom *= p + 1;
        while (m % p == 0) m /= p;
    }
    if (m > 1) denom *= m + 1;
    EllConstants c;
    c.D = mpq_class(24 * nd) / denom;
    c.alpha = c.D / nd;
    return c;
}

namespace {

long alpha_int(long ell) {
    EllConstants c = d_ell_const(ell);
    if (c.alpha.get_den() != 1)
        throw UnsupportedLevel("g_ell: exponent alpha is not an integer for this level");
    return c.alpha.get_num().get_si();
}

}  // namespace

QExpansion g_ell_series(long ell, long order_qpow) {
    if (!level_supported(ell)) throw UnsupportedLevel("g_ell_series: unsupported level");
    long alpha = alpha_int(ell);
    long M = order_qpow;
    auto eta_product = [M](const std::vector<mpq_class>& scales) {
        QExpansion r = eta_scaled(scales[0], M);
        for (size_t i = 1; i < scales.size(); ++i) r = mul(r, eta_scaled(scales[i], M));
        return r;
    };
    std::vector<mpq_class> num_scales, den_scales;
    if (ell % 2 == 1) {
        for (long d : divisors(ell)) {
            num_scales.push_back(mpq_class(d, 2));
            num_scales.push_back(2 * d);
            den_scales.push_back(d);
            den_scales.push_back(d);
        }
    } else {
        for (long d : divisors(ell / 2)) {
            num_scales.push_back(mpq_class(d, 2));
            num_scales.push_back(4 * d);
            den_scales.push_back(d);
            den_scales.push_back(2 * d);
        }
    }
    QExpansion base = mul(eta_product(num_scales), invert(eta_product(den_scales)));
    return pow_int(base, alpha);
}

Interval g_ell_value(long ell, const Interval& y, const special::EvalOptions& opt) {
    if (!level_supported(ell)) throw UnsupportedLevel("g_ell_value: unsupported level");
    long alpha = alpha_int(ell);
    Interval half = Interval::of_rational(mpq_class(1, 2), opt.prec);
    Interval r = Interval::exact(1, opt.prec);
    if (ell % 2 == 1) {
        for (long d : divisors(ell)) {
            Interval dy = Interval::exact(d, opt.prec) * y;
            r *= special::eta(dy * half, opt) * special::eta(2 * dy, opt) /
                 special::eta(dy, opt).pown(2);
        }
    } else {
        for (long d : divisors(ell / 2)) {
            Interval dy = Interval::exact(d, opt.prec) * y;
            r *= special::eta(dy * half, opt) * special::eta(4 * dy, opt) /
                 (special::eta(dy, opt) * special::eta(2 * dy, opt));
        }
    }
    return r.pown(alpha);
}

Interval g_ell_symmetry_value(long ell, const special::EvalOptions& opt) {
    Interval y = Interval::exact(ell, opt.prec).sqrt().inv();
    return g_ell_value(ell, y, opt);
}

// ---- rational polynomial helpers ----

namespace {

RatPoly trimmed(RatPoly p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
    return p;
}

// Remainder of a by b (b nonzero).
RatPoly poly_rem(RatPoly a, const RatPoly& b) {
    a = trimmed(a);
    RatPoly bb = trimmed(b);
    while (a.size() >= bb.size() && !a.empty()) {
        mpq_class f = a.back() / bb.back();
        size_t shift = a.size() - bb.size();
        for (size_t i = 0; i < bb.size(); ++i) a[shift + i] -= f * bb[i];
        a = trimmed(a);
    }
    return a;
}

RatPoly poly_gcd(RatPoly a, RatPoly b) {
    a = trimmed(a);
    b = trimmed(b);
    while (!b.empty()) {
        RatPoly r = poly_rem(a, b);
        a = b;
        b = r;
    }
    if (!a.empty()) {
        mpq_class lead = a.back();
        for (auto& c : a) c /= lead;
    }
    return a;
}

RatPoly poly_div_exact(const RatPoly& a, const RatPoly& b) {
    RatPoly r = trimmed(a);
    RatPoly bb = trimmed(b);
    RatPoly q(r.size() >= bb.size() ? r.size() - bb.size() + 1 : 0, mpq_class(0));
    while (r.size() >= bb.size() && !r.empty()) {
        mpq_class f = r.back() / bb.back();
        size_t shift = r.size() - bb.size();
        q[shift] = f;
        for (size_t i = 0; i < bb.size(); ++i) r[shift + i] -= f * bb[i];
        r = trimmed(r);
    }
    return q;
}

int sign_at(const RatPoly& p, const mpq_class& x) {
    return sgn(poly_eval(p, x));
}

int sign_changes(const std::vector<RatPoly>& chain, const mpq_class& x) {
    int changes = 0, prev = 0;
    for (const auto& p : chain) {
        int s = sign_at(p, x);
        if (s == 0) continue;
        if (prev != 0 && s != prev) ++changes;
        prev = s;
    }
    return changes;
}

}  // namespace

long poly_degree(const RatPoly& p) {
    RatPoly t = trimmed(p);
    return static_cast<long>(t.size()) - 1;
}

RatPoly poly_derivative(const RatPoly& p) {
    RatPoly d;
    for (size_t i = 1; i < p.size(); ++i) d.push_back(mpq_class(static_cast<long>(i)) * p[i]);
    return d;
}

mpq_class poly_eval(const RatPoly& p, const mpq_class& x) {
    mpq_class r = 0;
    for (auto it = p.rbegin(); it != p.rend(); ++it) r = r * x + *it;
    return r;
}

Interval poly_eval(const RatPoly& p, const Interval& x) {
    Interval r(x.prec());
    for (auto it = p.rbegin(); it != p.rend(); ++it)
        r = r * x + Interval::of_rational(*it, x.prec());
    return r;
}

std::vector<RatPoly> sturm_chain(const RatPoly& p) {
    std::vector<RatPoly> chain;
    RatPoly a = trimmed(p);
    if (a.empty()) return chain;
    chain.push_back(a);
    RatPoly b = poly_derivative(a);
    while (!trimmed(b).empty()) {
        chain.push_back(b);
        RatPoly r = poly_rem(a, b);
        for (auto& c : r) c = -c;
        a = b;
        b = r;
    }
    return chain;
}

int sturm_count(const std::vector<RatPoly>& chain, const mpq_class& a, const mpq_class& b) {
    if (chain.empty()) return 0;
    return sign_changes(chain, a) - sign_changes(chain, b);
}

std::vector<std::pair<mpq_class, mpq_class>> isolate_roots(const RatPoly& p, const mpq_class& a,
                                                           const mpq_class& b,
                                                           const mpq_class& width) {
    std::vector<std::pair<mpq_class, mpq_class>> roots;
    RatPoly sf = trimmed(p);
    if (poly_degree(sf) < 1) return roots;
    RatPoly g = poly_gcd(sf, poly_derivative(sf));
    if (poly_degree(g) >= 1) sf = poly_div_exact(sf, g);
    auto chain = sturm_chain(sf);
    std::vector<std::pair<mpq_class, mpq_class>> stack = {{a, b}};
    while (!stack.empty()) {
        auto [lo, hi] = stack.back();
        stack.pop_back();
        int n = sturm_count(chain, lo, hi);
        if (n == 0) continue;
        if (n == 1 && hi - lo <= width) {
            roots.push_back({lo, hi});
            continue;
        }
        mpq_class mid = (lo + hi) / 2;
        stack.push_back({lo, mid});
        stack.push_back({mid, hi});
    }
    std::sort(roots.begin(), roots.end(),
              [](const auto& x, const auto& y) { return x.first < y.first; });
    return roots;
}

// ---- fitting ----

SecrecyPolynomial fit_polynomial(const QExpansion& theta, long ell, long k, long max_degree) {
    if (!level_supported(ell)) throw UnsupportedLevel("fit_polynomial: unsupported level");
    if (theta.coeff_q(0) != 1)
        throw std::invalid_argument("fit_polynomial: theta must have constant term 1");
    if (max_degree < 0) throw std::invalid_argument("fit_polynomial: negative degree bound");
    long M = theta.order_qpow();
    if (M <= max_degree)
        throw std::invalid_argument("fit_polynomial: theta order must exceed max_degree");
    QExpansion ck = pow_int(theta_series(c_ell(ell), M), k);
    QExpansion residual = mul(theta, invert(ck));
    QExpansion g = g_ell_series(ell, M);
    long avail = std::min(residual.order(), g.order() * 1L) / QExpansion::grid;
    SecrecyPolynomial P;
    P.ell = ell;
    P.k = k;
    QExpansion gp = QExpansion::one(g.order());  // g^i
    for (long i = 0; i <= max_degree; ++i) {
        mpq_class ci = residual.coeff_q(i);
        P.coeffs.push_back(ci);
        if (ci != 0) residual = sub(residual, gp.scaled(ci));
        if (i < max_degree) gp = mul(gp, g);
    }
    for (long m = 0; m < avail; ++m) {
        if (residual.coeff_q(m) != 0)
            throw NoExactFit("fit_polynomial: nonzero residual at q^" + std::to_string(m) +
                                 " (insufficient degree or wrong ell/k)",
                             m);
    }
    // Off-grid residual terms would mean the quotient is not integral in q.
    for (const auto& [e, c] : residual.terms())
        if (e % QExpansion::grid != 0 && e < avail * QExpansion::grid)
            throw NoExactFit("fit_polynomial: off-grid residual term", e / QExpansion::grid);
    while (P.coeffs.size() > 1 && P.coeffs.back() == 0) P.coeffs.pop_back();
    return P;
}

// ---- conjecture decision ----

namespace {

Interval xstar_enclosure(long ell, special::EvalOptions opt, double target = 1e-12) {
    for (int attempt = 0; attempt < 5; ++attempt) {
        Interval x = g_ell_symmetry_value(ell, opt);
        if (x.width() <= target) return x;
        opt.prec *= 2;
    }
    throw PrecisionUnreachable("check_conjecture: cannot enclose g_ell(1/sqrt(ell))");
}

// Certified comparison of P over the rational box [lo, hi] against the value
// enclosure v: +1 all above, -1 all below, 0 unresolved.
int compare_over(const RatPoly& p, const mpq_class& lo, const mpq_class& hi, const Interval& v,
                 mpfr_prec_t prec, Interval* gap) {
    Interval box = Interval::of_rational(lo, prec);
    box = box.widen_hi(Interval::of_rational(hi - lo, prec));
    Interval val = poly_eval(p, box);
    Interval diff = val - v;
    if (gap) *gap = diff;
    if (diff.is_positive()) return 1;
    if (diff.is_negative()) return -1;
    return 0;
}

mpq_class rational_below(const Interval& x, int denom_bits = 80) {
    // A rational slightly below x.lo (exact double -> mpq, then nudge down).
    mpq_class q(x.lo());
    q -= mpq_class(1, 1) / mpq_class(mpz_class(1) << denom_bits);
    return q;
}

}  // namespace

nlohmann::json Verdict::to_json() const {
    nlohmann::json j;
    switch (outcome) {
        case Outcome::Holds: j["outcome"] = "Holds"; break;
        case Outcome::Fails: j["outcome"] = "Fails"; break;
        case Outcome::Inconclusive: j["outcome"] = "Inconclusive"; break;
    }
    j["x_star"] = {x_star.lo(), x_star.hi()};
    nlohmann::json cps = nlohmann::json::array();
    for (const auto& cp : critical_points)
        cps.push_back({{"interval", {cp.lo.get_str(), cp.hi.get_str()}},
                       {"comparison", cp.comparison}});
    j["critical_points"] = cps;
    if (witness) j["witness"] = witness->get_str();
    if (margin) j["margin"] = {margin->lo(), margin->hi()};
    if (!note.empty()) j["note"] = note;
    return j;
}

Verdict check_conjecture(const SecrecyPolynomial& P, CheckMode mode,
                         const special::EvalOptions& opt) {
    if (!level_supported(P.ell)) throw UnsupportedLevel("check_conjecture: unsupported level");
    if (mode == CheckMode::ExactIff && !level_prime_mode(P.ell))
        throw UnsupportedLevel("check_conjecture: exact mode requires a prime level");
    Verdict v;
    RatPoly coeffs = P.coeffs;
    while (coeffs.size() > 1 && coeffs.back() == 0) coeffs.pop_back();
    v.x_star = xstar_enclosure(P.ell, opt);
    if (poly_degree(coeffs) <= 0) {
        v.outcome = Outcome::Holds;
        v.note = "constant polynomial: the modified secrecy function equals that of (C^ell)^k";
        return v;
    }
    const mpfr_prec_t prec = std::max<mpfr_prec_t>(opt.prec, 256);
    Interval p_star = poly_eval(coeffs, v.x_star);

    auto certify_witness = [&](const mpq_class& w) -> bool {
        if (w <= 0 || !Interval::of_rational(w, prec).strictly_below(v.x_star)) return false;
        Interval val = poly_eval(coeffs, Interval::of_rational(w, prec));
        return val.strictly_below(p_star);
    };

    bool any_unresolved = false;
    Interval min_gap(prec);
    bool have_gap = false;

    // Boundary x -> 0+: the limit value is c0.
    {
        Interval c0 = Interval::of_rational(coeffs[0], prec);
        Interval diff = c0 - p_star;
        if (diff.is_negative()) {
            // P dips below P(x*) near the left end; certify a concrete point.
            for (int j = 1; j < 80; ++j) {
                mpq_class w = rational_below(v.x_star) / (mpz_class(1) << j);
                if (certify_witness(w)) {
                    v.outcome = Outcome::Fails;
                    v.witness = w;
                    return v;
                }
            }
            any_unresolved = true;
        } else if (diff.is_positive()) {
            if (!have_gap || diff.lo() < min_gap.lo()) min_gap = diff;
            have_gap = true;
        } else {
            // Cannot be separated: possible equality c0 = P(x*).
            any_unresolved = true;
        }
    }

    // Critical points of P inside ]0, x*[.
    RatPoly dp = poly_derivative(coeffs);
    mpq_class upper(v.x_star.hi());
    mpq_class tiny = mpq_class(1, 1) / mpq_class(mpz_class(1) << 120);
    auto roots = isolate_roots(dp, mpq_class(0), upper, tiny);
    mpq_class xlo(v.x_star.lo());
    for (auto& [rlo, rhi] : roots) {
        if (rhi <= 0) continue;
        if (rlo >= xlo) continue;  // at or beyond the (open) right endpoint
        CriticalPoint cp;
        cp.lo = rlo;
        cp.hi = rhi;
        Interval gap(prec);
        cp.comparison = compare_over(coeffs, rlo, rhi, p_star, prec, &gap);
        if (cp.comparison == 0) {
            // One retry at doubled precision.
            cp.comparison = compare_over(coeffs, rlo, rhi, p_star, 2 * prec, &gap);
        }
        v.critical_points.push_back(cp);
        if (cp.comparison < 0) {
            mpq_class mid = (rlo + rhi) / 2;
            if (certify_witness(mid)) {
                v.outcome = Outcome::Fails;
                v.witness = mid;
                return v;
            }
            any_unresolved = true;
        } else if (cp.comparison > 0) {
            if (!have_gap || gap.lo() < min_gap.lo()) min_gap = gap;
            have_gap = true;
        } else {
            any_unresolved = true;
        }
    }

    if (any_unresolved) {
        v.outcome = Outcome::Inconclusive;
        v.note = "a comparison against P(x*) could not be separated at working precision";
        return v;
    }
    v.outcome = Outcome::Holds;
    if (have_gap) v.margin = min_gap;
    if (mode == CheckMode::Sufficient)
        v.note = "sufficient criterion (one direction) for composite levels";
    return v;
}

}  // namespace polynomize
}  // namespace latsec
