#pragma once

#include "latsec/qexp.hpp"

#include <optional>
#include <vector>

namespace latsec {

struct NotPositiveDefinite : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct WrongSpecKind : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A lattice given either as a diagonal direct sum of sqrt(a_k) Z or by an
// integral Gram matrix.  May carry a claimed modularity level.
class LatticeSpec {
public:
    enum class Kind { Diagonal, Gram };

    static LatticeSpec diagonal(std::vector<long> scales, std::optional<long> ell = {});
    static LatticeSpec gram(std::vector<std::vector<long>> matrix, std::optional<long> ell = {});

    Kind kind() const { return kind_; }
    long dim() const;
    const std::vector<long>& scales() const;
    const std::vector<std::vector<long>>& matrix() const;
    std::optional<long> ell() const { return ell_; }

    nlohmann::json to_json() const;
    static LatticeSpec from_json(const nlohmann::json& j);

private:
    LatticeSpec() = default;
    Kind kind_ = Kind::Diagonal;
    std::vector<long> scales_;
    std::vector<std::vector<long>> gram_;
    std::optional<long> ell_;
};

// D^ell = Z + sqrt(ell) Z.
LatticeSpec d_ell(long ell);

// C^ell = direct sum of sqrt(d) Z over the positive divisors d of ell.
LatticeSpec c_ell(long ell);

std::vector<long> divisors(long n);

// Pairing condition a_k a_{n+1-k} = ell on a diagonal spec.
bool check_diagonal_modularity(const LatticeSpec& L, long ell);

// Theta series as a q-expansion: product formula for diagonal specs,
// bounded lattice-point enumeration for Gram specs.
QExpansion theta_series(const LatticeSpec& L, long order_qpow);

}  // namespace latsec
