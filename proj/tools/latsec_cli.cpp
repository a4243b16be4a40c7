// Command-line front end: theta series, polynomial fitting and conjecture
// checks, the g_ell value table, unimodality scans, lemma verification
// sweeps, and rational-equivalence reports.

#include "latsec/lattice.hpp"
#include "latsec/polynomize.hpp"
#include "latsec/ratequiv.hpp"
#include "latsec/rigor.hpp"
#include "latsec/secrecy.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cmath>
#include <fstream>
#include <iostream>
#include <sstream>

using namespace latsec;
using nlohmann::json;

namespace {

constexpr int kExitValidation = 2;
constexpr int kExitInconclusive = 3;
constexpr int kExitFails = 4;

json load_json(const std::string& path_or_inline) {
    if (!path_or_inline.empty() && path_or_inline.front() == '{')
        return json::parse(path_or_inline);
    std::ifstream in(path_or_inline);
    if (!in) throw std::runtime_error("cannot open input: " + path_or_inline);
    return json::parse(in);
}

QExpansion theta_from_qcoeffs(const json& j) {
    auto coeffs = j.at("q_coeffs").get<std::vector<std::string>>();
    QExpansion th(static_cast<long>(coeffs.size()) * QExpansion::grid);
    for (size_t m = 0; m < coeffs.size(); ++m) {
        mpq_class c(coeffs[m]);
        c.canonicalize();
        th.set(QExpansion::grid * static_cast<long>(m), c);
    }
    return th;
}

json theta_to_qcoeffs(const QExpansion& th, long order) {
    std::vector<std::string> coeffs;
    for (long m = 0; m <= order; ++m) coeffs.push_back(th.coeff_q(m).get_str());
    return {{"q_coeffs", coeffs}};
}

special::EvalOptions options_for_digits(int digits) {
    special::EvalOptions opt;
    opt.prec = std::max<mpfr_prec_t>(128, 4 * digits + 64);
    return opt;
}

int outcome_exit(polynomize::Outcome o) {
    switch (o) {
        case polynomize::Outcome::Holds: return 0;
        case polynomize::Outcome::Inconclusive: return kExitInconclusive;
        case polynomize::Outcome::Fails: return kExitFails;
    }
    return kExitValidation;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"theta series, secrecy functions and the modified conjecture decision"};
    app.require_subcommand(1);

    int digits = 12;
    app.add_option("--precision", digits, "target precision in decimal digits")
        ->check(CLI::PositiveNumber);

    // theta
    auto* c_theta = app.add_subcommand("theta", "theta series of a lattice as q-coefficients");
    std::string theta_input;
    long theta_order = 10;
    c_theta->add_option("input", theta_input, "lattice JSON (file or inline)")->required();
    c_theta->add_option("--order", theta_order, "highest q-power to emit")
        ->check(CLI::PositiveNumber);

    // fit
    auto* c_fit = app.add_subcommand("fit", "fit Theta = Theta_{C^ell}^k sum c_i g_ell^i and check");
    std::string fit_input, fit_mode = "exact";
    long fit_ell = 0, fit_k = 1, fit_maxdeg = 0;
    c_fit->add_option("input", fit_input, "theta JSON {\"q_coeffs\": [...]}")->required();
    c_fit->add_option("--ell", fit_ell, "modularity level")->required();
    c_fit->add_option("--k", fit_k, "copies of C^ell")->required();
    c_fit->add_option("--max-degree", fit_maxdeg, "degree bound (0 = automatic)");
    c_fit->add_option("--mode", fit_mode)->check(CLI::IsMember({"exact", "sufficient"}));

    // check
    auto* c_check = app.add_subcommand("check", "decide the criterion for given coefficients");
    std::string check_coeffs, check_mode = "exact";
    long check_ell = 0;
    c_check->add_option("--coeffs", check_coeffs, "comma-separated rational coefficients c0,c1,...")
        ->required();
    c_check->add_option("--ell", check_ell)->required();
    c_check->add_option("--mode", check_mode)->check(CLI::IsMember({"exact", "sufficient"}));

    // table
    auto* c_table = app.add_subcommand("table", "values g_ell(1/sqrt(ell))");
    std::string levels_arg = "3,5,6,7,11,14,15,23";
    c_table->add_option("--levels", levels_arg, "comma-separated levels");

    // scan
    auto* c_scan = app.add_subcommand("scan", "certified unimodality scan (CSV on stdout)");
    std::string scan_kind = "xi", scan_lattice;
    long scan_ell = 0;
    double scan_kappa = 2, scan_lambda = 5, scan_span = 10;
    int scan_points = 41;
    c_scan->add_option("--kind", scan_kind)
        ->check(CLI::IsMember({"xi", "xi-modified", "theta-quotient"}));
    c_scan->add_option("--lattice", scan_lattice, "lattice JSON (file or inline)");
    c_scan->add_option("--ell", scan_ell);
    c_scan->add_option("--kappa", scan_kappa);
    c_scan->add_option("--lambda", scan_lambda);
    c_scan->add_option("--points", scan_points);
    c_scan->add_option("--span", scan_span);

    // verify
    auto* c_verify = app.add_subcommand("verify", "lemma verification sweeps (JSONL on stdout)");
    std::string lemma;
    c_verify
        ->add_option("--lemma", lemma,
                     "fourth-derivative | third-derivative | eta-properties | convolution")
        ->required();

    // equiv
    auto* c_equiv = app.add_subcommand("equiv", "rational equivalence against (C^ell)^k");
    std::string equiv_lattice;
    long equiv_ell = 0, equiv_k = 1;
    c_equiv->add_option("--lattice", equiv_lattice)->required();
    c_equiv->add_option("--ell", equiv_ell)->required();
    c_equiv->add_option("--k", equiv_k);

    CLI11_PARSE(app, argc, argv);
    special::EvalOptions opt = options_for_digits(digits);

    try {
        if (*c_theta) {
            LatticeSpec L = LatticeSpec::from_json(load_json(theta_input));
            QExpansion th = theta_series(L, theta_order + 1);
            std::cout << theta_to_qcoeffs(th, theta_order).dump(2) << "\n";
            return 0;
        }
        if (*c_fit) {
            QExpansion th = theta_from_qcoeffs(load_json(fit_input));
            long maxdeg = fit_maxdeg > 0 ? fit_maxdeg : std::min<long>(8, th.order_qpow() - 1);
            auto P = polynomize::fit_polynomial(th, fit_ell, fit_k, maxdeg);
            auto mode = fit_mode == "exact" ? polynomize::CheckMode::ExactIff
                                            : polynomize::CheckMode::Sufficient;
            auto verdict = polynomize::check_conjecture(P, mode, opt);
            json out = verdict.to_json();
            json cs = json::array();
            for (const auto& c : P.coeffs) cs.push_back(c.get_str());
            out["coeffs"] = cs;
            out["ell"] = P.ell;
            out["k"] = P.k;
            std::cout << out.dump(2) << "\n";
            return outcome_exit(verdict.outcome);
        }
        if (*c_check) {
            polynomize::SecrecyPolynomial P;
            P.ell = check_ell;
            P.k = 1;
            std::stringstream ss(check_coeffs);
            std::string tok;
            while (std::getline(ss, tok, ',')) {
                mpq_class c(tok);
                c.canonicalize();
                P.coeffs.push_back(c);
            }
            auto mode = check_mode == "exact" ? polynomize::CheckMode::ExactIff
                                              : polynomize::CheckMode::Sufficient;
            auto verdict = polynomize::check_conjecture(P, mode, opt);
            std::cout << verdict.to_json().dump(2) << "\n";
            return outcome_exit(verdict.outcome);
        }
        if (*c_table) {
            std::cout << "ell,lo,hi\n";
            std::stringstream ss(levels_arg);
            std::string tok;
            while (std::getline(ss, tok, ',')) {
                long ell = std::stol(tok);
                Interval v = polynomize::g_ell_symmetry_value(ell, opt);
                char buf[128];
                std::snprintf(buf, sizeof buf, "%ld,%.9g,%.9g\n", ell, v.lo(), v.hi());
                std::cout << buf;
            }
            return 0;
        }
        if (*c_scan) {
            secrecy::GridSpec grid;
            grid.points = scan_points;
            grid.span = scan_span;
            std::function<Interval(const Interval&)> fn;
            double sym = 1.0;
            bool expect_max = true;
            if (scan_kind == "theta-quotient") {
                double kap = scan_kappa, lam = scan_lambda;
                fn = [kap, lam, &opt](const Interval& y) {
                    return special::theta3(Interval(lam, opt.prec) * y, opt) *
                           special::theta3(y / Interval(lam, opt.prec), opt) /
                           (special::theta3(Interval(kap, opt.prec) * y, opt) *
                            special::theta3(y / Interval(kap, opt.prec), opt));
                };
            } else {
                if (scan_ell < 2 || scan_lattice.empty())
                    throw std::invalid_argument("scan: --ell and --lattice required");
                LatticeSpec L = LatticeSpec::from_json(load_json(scan_lattice));
                long ell = scan_ell;
                sym = 1.0 / std::sqrt(static_cast<double>(ell));
                if (scan_kind == "xi") {
                    expect_max = false;  // counterexample shape: trough at 1/sqrt(ell)
                    fn = [L, ell, &opt](const Interval& y) { return secrecy::xi(L, ell, y, opt); };
                } else {
                    fn = [L, ell, &opt](const Interval& y) {
                        return secrecy::xi_modified(L, ell, y, opt);
                    };
                }
            }
            auto rep = secrecy::unimodality_scan(fn, sym, grid, expect_max);
            rep.write_csv(std::cout);
            std::cerr << "extremum bracket: [" << rep.grid[rep.extremum_lo] << ", "
                      << rep.grid[rep.extremum_hi] << "]  shape_consistent="
                      << rep.shape_consistent << " symmetry_ok=" << rep.symmetry_ok
                      << " inconclusive_cells=" << rep.inconclusive_cells << "\n";
            return 0;
        }
        if (*c_verify) {
            rigor::SweepReport rep;
            if (lemma == "fourth-derivative") {
                rep = rigor::verify_fourth_derivative_sweep(opt);
            } else if (lemma == "third-derivative") {
                std::vector<double> ys;
                for (double y = 1.5; y <= 10.0; y += 0.25) ys.push_back(y);
                rep = rigor::verify_third_derivative_negativity(ys, opt);
            } else if (lemma == "eta-properties") {
                std::vector<double> xs;
                for (int i = -20; i <= 20; ++i) xs.push_back(i * 0.1);
                rep = rigor::verify_eta_derivative_properties(xs, opt);
            } else if (lemma == "convolution") {
                double ks[] = {0.0, std::log(2.0), 0.3};
                double hs[] = {std::log(5.0), std::log(3.0), 1.1};
                double xs[] = {0.0, 0.3, -0.7};
                for (double k : ks)
                    for (double h : hs)
                        for (double x : xs) {
                            if (h <= k) continue;
                            double r = rigor::convolution_identity_residual(k, h, x);
                            rigor::CertRecord rec;
                            rec.target = "convolution_identity_residual";
                            rec.where_lo = rec.where_hi = x;
                            rec.bound_lo = 0;
                            rec.bound_hi = r;
                            rec.certified = r < 1e-8;
                            if (!rec.certified) ++rep.failures;
                            rep.records.push_back(rec);
                        }
            } else {
                throw std::invalid_argument("verify: unknown lemma " + lemma);
            }
            rep.write_jsonl(std::cout);
            std::cerr << rep.records.size() << " records, " << rep.failures << " failures\n";
            return rep.failures == 0 ? 0 : kExitFails;
        }
        if (*c_equiv) {
            LatticeSpec L = LatticeSpec::from_json(load_json(equiv_lattice));
            auto rep = ratequiv::rationally_equivalent(L, equiv_ell, equiv_k);
            std::cout << rep.to_json().dump(2) << "\n";
            return 0;
        }
    } catch (const polynomize::NoExactFit& e) {
        json err = {{"error", "NoExactFit"},
                    {"message", e.what()},
                    {"first_failing_qpow", e.first_failing_qpow}};
        std::cerr << err.dump() << "\n";
        return kExitValidation;
    } catch (const std::exception& e) {
        json err = {{"error", typeid(e).name()}, {"message", e.what()}};
        std::cerr << err.dump() << "\n";
        return kExitValidation;
    }
    return kExitValidation;
}
