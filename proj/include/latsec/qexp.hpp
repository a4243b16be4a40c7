#pragma once

#include <gmpxx.h>

#include <map>
#include <stdexcept>
#include <string>

#include <json.hpp>

namespace latsec {

struct ZeroLeadingCoefficient : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct OffGridExponent : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Truncated formal series in q = e^{-pi y} with exact rational coefficients.
// Exponents live on a fixed 1/24 grid: the map key e represents q^{e/24}.
// Coefficients are known exactly for all grid indices < order(); anything at
// or beyond the order is unknown.  Negative indices are permitted for
// intermediate eta quotients; theta series and eta products constructed here
// start on the nonnegative grid.
class QExpansion {
public:
    static constexpr long grid = 24;

    explicit QExpansion(long order_grid) : order_(order_grid) {}

    static QExpansion zero(long order_grid) { return QExpansion(order_grid); }
    static QExpansion one(long order_grid);
    // Monomial c * q^{idx/24}.
    static QExpansion monomial(const mpq_class& c, long idx, long order_grid);

    long order() const { return order_; }
    // Number of full q-powers covered, i.e. coefficients of q^0..q^{m} are
    // known exactly for m < order_qpow().
    long order_qpow() const { return order_ / grid; }

    mpq_class at(long idx) const;
    mpq_class coeff_q(long m) const { return at(grid * m); }
    void set(long idx, const mpq_class& c);

    bool is_zero() const;
    // Smallest index with nonzero coefficient; throws ZeroLeadingCoefficient
    // if the series is identically zero through its order.
    long leading_index() const;

    const std::map<long, mpq_class>& terms() const { return coeffs_; }

    QExpansion truncated(long new_order) const;

    friend QExpansion add(const QExpansion& a, const QExpansion& b);
    friend QExpansion sub(const QExpansion& a, const QExpansion& b);
    friend QExpansion mul(const QExpansion& a, const QExpansion& b);
    QExpansion scaled(const mpq_class& c) const;

    nlohmann::json to_json() const;
    static QExpansion from_json(const nlohmann::json& j);

    bool operator==(const QExpansion& o) const;

private:
    std::map<long, mpq_class> coeffs_;
    long order_;
};

QExpansion add(const QExpansion& a, const QExpansion& b);
QExpansion sub(const QExpansion& a, const QExpansion& b);
QExpansion mul(const QExpansion& a, const QExpansion& b);
QExpansion invert(const QExpansion& a);
QExpansion pow_int(const QExpansion& a, long e);

// Theta series of sqrt(a) Z: sum over n of q^{a n^2}, truncated.
// order_qpow counts full q-powers.
QExpansion theta_one_dim(long a, long order_qpow);

// q-expansion of eta(d y) in q = e^{-pi y}: q^{d/12} prod_{n>=1} (1 - q^{2nd}).
// Requires 2d to be a grid index, i.e. denominator of d divides 2.
QExpansion eta_scaled(const mpq_class& d, long order_qpow);

}  // namespace latsec
