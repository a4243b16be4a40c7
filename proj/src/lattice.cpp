#include "latsec/lattice.hpp"

#include <algorithm>
#include <cmath>

namespace latsec {

namespace {

bool is_perfect_square(long n) {
    if (n < 0) return false;
    long r = static_cast<long>(std::llround(std::sqrt(static_cast<double>(n))));
    for (long s = std::max(0L, r - 1); s <= r + 1; ++s)
        if (s * s == n) return true;
    return false;
}

}  // namespace

LatticeSpec LatticeSpec::diagonal(std::vector<long> scales, std::optional<long> ell) {
    if (scales.empty()) throw std::invalid_argument("diagonal: empty scale list");
    for (long a : scales)
        if (a < 1) throw std::invalid_argument("diagonal: scales must be positive");
    if (ell && scales.size() % 2 == 1 && !is_perfect_square(*ell))
        throw std::invalid_argument(
            "diagonal: odd dimension requires the claimed level to be a perfect square");
    LatticeSpec L;
    L.kind_ = Kind::Diagonal;
    L.scales_ = std::move(scales);
    L.ell_ = ell;
    return L;
}

LatticeSpec LatticeSpec::gram(std::vector<std::vector<long>> matrix, std::optional<long> ell) {
    size_t n = matrix.size();
    if (n == 0) throw std::invalid_argument("gram: empty matrix");
    for (size_t i = 0; i < n; ++i) {
        if (matrix[i].size() != n) throw std::invalid_argument("gram: matrix must be square");
        for (size_t j = 0; j < n; ++j)
            if (matrix[i][j] != matrix[j][i])
                throw std::invalid_argument("gram: matrix must be symmetric");
    }
    LatticeSpec L;
    L.kind_ = Kind::Gram;
    L.gram_ = std::move(matrix);
    L.ell_ = ell;
    return L;
}

long LatticeSpec::dim() const {
    return kind_ == Kind::Diagonal ? static_cast<long>(scales_.size())
                                   : static_cast<long>(gram_.size());
}

const std::vector<long>& LatticeSpec::scales() const {
    if (kind_ != Kind::Diagonal) throw WrongSpecKind("scales: not a diagonal spec");
    return scales_;
}

const std::vector<std::vector<long>>& LatticeSpec::matrix() const {
    if (kind_ != Kind::Gram) throw WrongSpecKind("matrix: not a Gram spec");
    return gram_;
}

nlohmann::json LatticeSpec::to_json() const {
    nlohmann::json j;
    if (kind_ == Kind::Diagonal) {
        j["type"] = "diagonal";
        j["scales"] = scales_;
    } else {
        j["type"] = "gram";
        j["matrix"] = gram_;
    }
    if (ell_) j["ell"] = *ell_;
    return j;
}

LatticeSpec LatticeSpec::from_json(const nlohmann::json& j) {
    std::optional<long> ell;
    if (j.contains("ell")) ell = j.at("ell").get<long>();
    std::string type = j.at("type").get<std::string>();
    if (type == "diagonal")
        return diagonal(j.at("scales").get<std::vector<long>>(), ell);
    if (type == "gram")
        return gram(j.at("matrix").get<std::vector<std::vector<long>>>(), ell);
    throw std::invalid_argument("LatticeSpec: unknown type " + type);
}

LatticeSpec d_ell(long ell) {
    if (ell < 2) throw std::invalid_argument("d_ell: ell must be >= 2");
    return LatticeSpec::diagonal({1, ell}, ell);
}

std::vector<long> divisors(long n) {
    std::vector<long> ds;
    for (long d = 1; d * d <= n; ++d) {
        if (n % d) continue;
        ds.push_back(d);
        if (d != n / d) ds.push_back(n / d);
    }
    std::sort(ds.begin(), ds.end());
    return ds;
}

LatticeSpec c_ell(long ell) {
    if (ell < 2) throw std::invalid_argument("c_ell: ell must be >= 2");
    return LatticeSpec::diagonal(divisors(ell), ell);
}

bool check_diagonal_modularity(const LatticeSpec& L, long ell) {
    // the pairing condition reads off the ascending order of the scales
    auto a = L.scales();
    std::sort(a.begin(), a.end());
    size_t n = a.size();
    for (size_t k = 0; k < n; ++k)
        if (a[k] * a[n - 1 - k] != ell) return false;
    return true;
}

namespace {

// Exact rational LDL of a symmetric matrix; throws unless positive-definite.
struct LDL {
    std::vector<mpq_class> d;
    std::vector<std::vector<mpq_class>> u;  // unit upper factor
};

LDL ldl_decompose(const std::vector<std::vector<long>>& G) {
    size_t n = G.size();
    std::vector<std::vector<mpq_class>> q(n, std::vector<mpq_class>(n));
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) q[i][j] = G[i][j];
    LDL f;
    f.d.resize(n);
    f.u.assign(n, std::vector<mpq_class>(n, 0));
    for (size_t i = 0; i < n; ++i) {
        if (q[i][i] <= 0) throw NotPositiveDefinite("theta_series: Gram matrix not positive-definite");
        f.d[i] = q[i][i];
        f.u[i][i] = 1;
        for (size_t j = i + 1; j < n; ++j) f.u[i][j] = q[i][j] / f.d[i];
        for (size_t k = i + 1; k < n; ++k)
            for (size_t l = k; l < n; ++l) {
                q[k][l] -= f.d[i] * f.u[i][k] * f.u[i][l];
                q[l][k] = q[k][l];
            }
    }
    return f;
}

// Recursively enumerate v in Z^n with v^T G v < bound, counting exact norms.
void enumerate(const LDL& f, long level, std::vector<long>& v, const mpq_class& rem, long bound,
               std::map<long, long>& counts) {
    if (level < 0) {
        mpq_class norm = bound - rem;
        counts[norm.get_num().get_si()] += 1;
        return;
    }
    size_t n = f.d.size();
    mpq_class center = 0;
    for (size_t j = level + 1; j < n; ++j) center += f.u[level][j] * v[j];
    double cd = center.get_d();
    double radius = std::sqrt(mpq_class(rem / f.d[level]).get_d()) + 1e-9;
    long lo = static_cast<long>(std::floor(-cd - radius)) - 1;
    long hi = static_cast<long>(std::ceil(-cd + radius)) + 1;
    for (long x = lo; x <= hi; ++x) {
        mpq_class off = center + x;
        mpq_class t = f.d[level] * off * off;
        if (t >= rem) continue;
        v[level] = x;
        enumerate(f, level - 1, v, rem - t, bound, counts);
    }
    v[level] = 0;
}

}  // namespace

QExpansion theta_series(const LatticeSpec& L, long order_qpow) {
    if (L.kind() == LatticeSpec::Kind::Diagonal) {
        QExpansion r = theta_one_dim(L.scales()[0], order_qpow);
        for (size_t k = 1; k < L.scales().size(); ++k)
            r = mul(r, theta_one_dim(L.scales()[k], order_qpow));
        return r;
    }
    LDL f = ldl_decompose(L.matrix());
    std::vector<long> v(L.dim(), 0);
    std::map<long, long> counts;
    enumerate(f, L.dim() - 1, v, mpq_class(order_qpow), order_qpow, counts);
    QExpansion r(order_qpow * QExpansion::grid);
    for (const auto& [m, c] : counts) r.set(QExpansion::grid * m, c);
    return r;
}

}  // namespace latsec
