#include "latsec/ratequiv.hpp"

#include <algorithm>
#include <set>

namespace latsec {
namespace ratequiv {

DiagonalizedForm diagonalize(const std::vector<std::vector<mpq_class>>& G) {
    size_t n = G.size();
    for (const auto& row : G)
        if (row.size() != n) throw std::invalid_argument("diagonalize: matrix must be square");
    auto a = G;
    DiagonalizedForm f;
    for (size_t i = 0; i < n; ++i) {
        if (a[i][i] == 0) {
            // Bring a nonzero diagonal entry to position i, or manufacture one
            // by adding a row/column pair.
            size_t j = i + 1;
            while (j < n && a[j][j] == 0) ++j;
            if (j < n) {
                std::swap(a[i], a[j]);
                for (size_t r = 0; r < n; ++r) std::swap(a[r][i], a[r][j]);
            } else {
                for (j = i + 1; j < n && a[i][j] == 0; ++j) {
                }
                if (j == n) throw Singular("diagonalize: singular matrix");
                for (size_t r = 0; r < n; ++r) a[i][r] += a[j][r];
                for (size_t r = 0; r < n; ++r) a[r][i] += a[r][j];
            }
        }
        mpq_class pivot = a[i][i];
        for (size_t k = i + 1; k < n; ++k) {
            mpq_class factor = a[i][k] / pivot;
            if (factor == 0) continue;
            for (size_t r = 0; r < n; ++r) a[r][k] -= factor * a[r][i];
            for (size_t r = 0; r < n; ++r) a[k][r] -= factor * a[i][r];
        }
        f.entries.push_back(pivot);
    }
    return f;
}

namespace {

// Strip all factors of p; returns the exponent.
long strip_p(mpz_class& u, long p) {
    long v = 0;
    while (u % p == 0) {
        u /= p;
        ++v;
    }
    return v;
}

int legendre(const mpz_class& a, long p) {
    mpz_class pp(p);
    return mpz_legendre(a.get_mpz_t(), pp.get_mpz_t());
}

// Hilbert symbol for nonzero integers.
int hilbert_int(mpz_class a, mpz_class b, long p) {
    if (p == 0) return (a < 0 && b < 0) ? -1 : 1;
    long alpha = strip_p(a, p);
    long beta = strip_p(b, p);
    if (p == 2) {
        auto eps = [](const mpz_class& u) { return ((u - 1) / 2) % 2 != 0; };
        auto omega = [](const mpz_class& u) { return ((u * u - 1) / 8) % 2 != 0; };
        bool exponent = (eps(a) && eps(b)) ^ (alpha % 2 != 0 && omega(b)) ^
                        (beta % 2 != 0 && omega(a));
        return exponent ? -1 : 1;
    }
    int s = 1;
    if ((alpha * beta) % 2 != 0 && ((p - 1) / 2) % 2 != 0) s = -s;
    if (beta % 2 != 0) s *= legendre(a, p);
    if (alpha % 2 != 0) s *= legendre(b, p);
    return s;
}

// Square-class representative of a rational: num * den.
mpz_class square_class(const mpq_class& q) {
    return q.get_num() * q.get_den();
}

bool is_rational_square(const mpq_class& q) {
    if (q <= 0) return false;
    mpz_class s = square_class(q);
    return mpz_perfect_square_p(s.get_mpz_t()) != 0;
}

std::vector<long> prime_factors(mpz_class n) {
    std::vector<long> ps;
    n = abs(n);
    for (long p = 2; mpz_class(p) * p <= n; ++p) {
        if (n % p == 0) {
            ps.push_back(p);
            while (n % p == 0) n /= p;
        }
    }
    if (n > 1) ps.push_back(n.get_si());
    return ps;
}

}  // namespace

int hilbert_symbol(const mpq_class& a, const mpq_class& b, long p) {
    if (a == 0 || b == 0) throw std::invalid_argument("hilbert_symbol: arguments must be nonzero");
    return hilbert_int(square_class(a), square_class(b), p);
}

int hasse_witt(const DiagonalizedForm& f, long p) {
    int s = 1;
    for (size_t i = 0; i < f.entries.size(); ++i)
        for (size_t j = i + 1; j < f.entries.size(); ++j)
            s *= hilbert_symbol(f.entries[i], f.entries[j], p);
    return s;
}

nlohmann::json EquivalenceReport::to_json() const {
    nlohmann::json rows = nlohmann::json::array();
    for (const auto& r : hasse_rows)
        rows.push_back({{"p", r.p == 0 ? std::string("inf") : std::to_string(r.p)},
                        {"eps_lhs", r.eps_lhs},
                        {"eps_rhs", r.eps_rhs}});
    return {{"discriminants_match", discriminants_match},
            {"signatures_match", signatures_match},
            {"hasse", rows},
            {"disc_lhs", disc_lhs.get_str()},
            {"disc_rhs", disc_rhs.get_str()},
            {"equivalent", equivalent}};
}

EquivalenceReport rationally_equivalent(const LatticeSpec& L, long ell, long k) {
    LatticeSpec C = c_ell(ell);
    if (L.dim() != k * C.dim())
        throw DimensionMismatch("rationally_equivalent: dim L != k * d(ell)");

    DiagonalizedForm lhs;
    if (L.kind() == LatticeSpec::Kind::Diagonal) {
        for (long a : L.scales()) lhs.entries.push_back(a);
    } else {
        std::vector<std::vector<mpq_class>> G(L.dim(), std::vector<mpq_class>(L.dim()));
        for (long i = 0; i < L.dim(); ++i)
            for (long j = 0; j < L.dim(); ++j) G[i][j] = L.matrix()[i][j];
        lhs = diagonalize(G);
    }
    DiagonalizedForm rhs;
    for (long i = 0; i < k; ++i)
        for (long d : C.scales()) rhs.entries.push_back(d);

    EquivalenceReport rep;
    for (const auto& e : lhs.entries) rep.disc_lhs = rep.disc_lhs == 0 ? e : rep.disc_lhs * e;
    for (const auto& e : rhs.entries) rep.disc_rhs = rep.disc_rhs == 0 ? e : rep.disc_rhs * e;
    rep.discriminants_match = is_rational_square(rep.disc_lhs / rep.disc_rhs);

    auto positives = [](const DiagonalizedForm& f) {
        return std::count_if(f.entries.begin(), f.entries.end(),
                             [](const mpq_class& e) { return e > 0; });
    };
    rep.signatures_match = positives(lhs) == positives(rhs);

    // Places: infinity, 2, primes dividing ell, and primes appearing in any
    // diagonal entry.  Symbols of units at other odd primes are trivial.
    std::set<long> places = {0, 2};
    for (long p : prime_factors(ell)) places.insert(p);
    for (const auto& f : {lhs, rhs})
        for (const auto& e : f.entries)
            for (long p : prime_factors(square_class(e))) places.insert(p);
    bool hasse_ok = true;
    for (long p : places) {
        InvariantRow row{p, hasse_witt(lhs, p), hasse_witt(rhs, p)};
        rep.hasse_rows.push_back(row);
        if (row.eps_lhs != row.eps_rhs) hasse_ok = false;
    }
    rep.equivalent = rep.discriminants_match && rep.signatures_match && hasse_ok;
    return rep;
}

}  // namespace ratequiv
}  // namespace latsec
