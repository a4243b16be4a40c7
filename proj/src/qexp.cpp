#include "latsec/qexp.hpp"

#include <algorithm>

namespace latsec {

QExpansion QExpansion::one(long order_grid) {
    QExpansion r(order_grid);
    r.set(0, 1);
    return r;
}

QExpansion QExpansion::monomial(const mpq_class& c, long idx, long order_grid) {
    QExpansion r(order_grid);
    r.set(idx, c);
    return r;
}

mpq_class QExpansion::at(long idx) const {
    auto it = coeffs_.find(idx);
    return it == coeffs_.end() ? mpq_class(0) : it->second;
}

void QExpansion::set(long idx, const mpq_class& c) {
    if (idx >= order_) return;
    if (c == 0)
        coeffs_.erase(idx);
    else
        coeffs_[idx] = c;
}

bool QExpansion::is_zero() const {
    return coeffs_.empty();
}

long QExpansion::leading_index() const {
    if (coeffs_.empty()) throw ZeroLeadingCoefficient("leading_index of zero series");
    return coeffs_.begin()->first;
}

QExpansion QExpansion::truncated(long new_order) const {
    QExpansion r(std::min(order_, new_order));
    for (const auto& [e, c] : coeffs_)
        if (e < r.order_) r.coeffs_[e] = c;
    return r;
}

QExpansion QExpansion::scaled(const mpq_class& c) const {
    QExpansion r(order_);
    if (c == 0) return r;
    for (const auto& [e, v] : coeffs_) r.coeffs_[e] = c * v;
    return r;
}

QExpansion add(const QExpansion& a, const QExpansion& b) {
    QExpansion r(std::min(a.order_, b.order_));
    for (const auto& [e, c] : a.coeffs_)
        if (e < r.order_) r.coeffs_[e] = c;
    for (const auto& [e, c] : b.coeffs_) {
        if (e >= r.order_) continue;
        mpq_class s = r.at(e) + c;
        if (s == 0)
            r.coeffs_.erase(e);
        else
            r.coeffs_[e] = s;
    }
    return r;
}

QExpansion sub(const QExpansion& a, const QExpansion& b) {
    return add(a, b.scaled(-1));
}

QExpansion mul(const QExpansion& a, const QExpansion& b) {
    // A factor that is zero through its order carries no leading shift; its
    // own order is the only information bound.
    long la = a.is_zero() ? a.order_ : a.leading_index();
    long lb = b.is_zero() ? b.order_ : b.leading_index();
    QExpansion r(std::min(a.order_ + lb, b.order_ + la));
    for (const auto& [ea, ca] : a.coeffs_) {
        for (const auto& [eb, cb] : b.coeffs_) {
            long e = ea + eb;
            if (e >= r.order_) continue;
            mpq_class s = r.at(e) + ca * cb;
            if (s == 0)
                r.coeffs_.erase(e);
            else
                r.coeffs_[e] = s;
        }
    }
    return r;
}

QExpansion invert(const QExpansion& a) {
    if (a.is_zero()) throw ZeroLeadingCoefficient("invert: zero series");
    long v = a.leading_index();
    const mpq_class c0 = a.at(v);
    // Relative coefficients a_j = coeff at v + j, known for j < n.
    long n = a.order() - v;
    QExpansion r(n - v);  // leading index -v, order (order_a - 2v)
    std::map<long, mpq_class> d;  // relative inverse coefficients
    d[0] = 1 / c0;
    r.set(-v, d[0]);
    for (long j = 1; j < n; ++j) {
        mpq_class s = 0;
        for (const auto& [i, di] : d) {
            if (i >= j) break;
            mpq_class aj = a.at(v + (j - i));
            if (aj != 0) s += aj * di;
        }
        if (s != 0) {
            mpq_class dj = -s / c0;
            d[j] = dj;
            r.set(-v + j, dj);
        }
    }
    return r;
}

QExpansion pow_int(const QExpansion& a, long e) {
    if (e < 0) return pow_int(invert(a), -e);
    // Order bookkeeping for the empty product: keep the operand's order.
    QExpansion acc = QExpansion::one(a.order());
    if (e == 0) return acc;
    QExpansion base = a;
    unsigned long n = static_cast<unsigned long>(e);
    bool first = true;
    while (n > 0) {
        if (n & 1) {
            acc = first ? base : mul(acc, base);
            first = false;
        }
        n >>= 1;
        if (n > 0) base = mul(base, base);
    }
    return acc;
}

QExpansion theta_one_dim(long a, long order_qpow) {
    if (a < 1) throw std::invalid_argument("theta_one_dim: scale must be >= 1");
    long order = order_qpow * QExpansion::grid;
    QExpansion r(order);
    r.set(0, 1);
    for (long n = 1; a * n * n < order_qpow; ++n) r.set(QExpansion::grid * a * n * n, 2);
    return r;
}

QExpansion eta_scaled(const mpq_class& d, long order_qpow) {
    if (d <= 0) throw std::invalid_argument("eta_scaled: d must be positive");
    mpq_class lead = 2 * d;  // leading exponent d/12 in grid units
    if (lead.get_den() != 1)
        throw OffGridExponent("eta_scaled: leading exponent d/12 is off the 1/24 grid");
    long lead_idx = static_cast<long>(lead.get_num().get_si());
    mpq_class step = 48 * d;  // q^{2d} in grid units
    long step_idx = static_cast<long>(mpq_class(step).get_num().get_si());
    long order = order_qpow * QExpansion::grid + lead_idx;
    QExpansion r = QExpansion::monomial(1, lead_idx, order);
    for (long n = 1; n * step_idx < order - lead_idx; ++n) {
        QExpansion f(order);
        f.set(0, 1);
        f.set(n * step_idx, -1);
        r = mul(r, f).truncated(order);
    }
    return r;
}

nlohmann::json QExpansion::to_json() const {
    nlohmann::json terms = nlohmann::json::array();
    for (const auto& [e, c] : coeffs_) terms.push_back({e, c.get_str()});
    return {{"grid", grid}, {"order", order_}, {"terms", terms}};
}

QExpansion QExpansion::from_json(const nlohmann::json& j) {
    if (j.at("grid").get<long>() != grid)
        throw OffGridExponent("QExpansion::from_json: unsupported grid denominator");
    QExpansion r(j.at("order").get<long>());
    for (const auto& t : j.at("terms")) {
        mpq_class c(t.at(1).get<std::string>());
        c.canonicalize();
        r.set(t.at(0).get<long>(), c);
    }
    return r;
}

bool QExpansion::operator==(const QExpansion& o) const {
    return order_ == o.order_ && coeffs_ == o.coeffs_;
}

}  // namespace latsec
