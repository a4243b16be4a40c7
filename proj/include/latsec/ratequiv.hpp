#pragma once

#include "latsec/lattice.hpp"

#include <vector>

namespace latsec {
namespace ratequiv {

struct Singular : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct DimensionMismatch : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Diagonal representative of a quadratic form over Q.
struct DiagonalizedForm {
    std::vector<mpq_class> entries;
};

// Congruent diagonalization of a nonsingular symmetric rational matrix.
DiagonalizedForm diagonalize(const std::vector<std::vector<mpq_class>>& G);

// Hilbert symbol (a, b)_p; p = 0 denotes the infinite place.
int hilbert_symbol(const mpq_class& a, const mpq_class& b, long p);

// Hasse-Witt invariant: product of (a_i, a_j)_p over i < j.
int hasse_witt(const DiagonalizedForm& f, long p);

struct InvariantRow {
    long p;  // 0 = infinity
    int eps_lhs, eps_rhs;
};

struct EquivalenceReport {
    bool discriminants_match = false;
    bool signatures_match = false;
    std::vector<InvariantRow> hasse_rows;
    bool equivalent = false;
    mpq_class disc_lhs, disc_rhs;

    nlohmann::json to_json() const;
};

// Rational-equivalence test of L against (C^ell)^k via discriminant
// square class, signature, and Hasse-Witt invariants at the finitely many
// relevant places.
EquivalenceReport rationally_equivalent(const LatticeSpec& L, long ell, long k);

}  // namespace ratequiv
}  // namespace latsec
