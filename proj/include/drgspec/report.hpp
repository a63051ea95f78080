#ifndef DRGSPEC_REPORT_HPP
#define DRGSPEC_REPORT_HPP

// JSON and text rendering of an Analysis. Requires nlohmann/json.

#include "drgspec/excess.hpp"
#include "drgspec/spectrum.hpp"

#include "json.hpp"

#include <cmath>
#include <iomanip>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

namespace drgspec {

inline constexpr int kReportSchema = 1;
inline constexpr const char* kToolVersion = "0.1.0";

namespace detail {

inline nlohmann::json finite_or_null(double v)
{
    return std::isfinite(v) ? nlohmann::json(v) : nlohmann::json(nullptr);
}

inline std::string num(double v, int precision = 10)
{
    std::ostringstream os;
    os << std::setprecision(precision) << v;
    return os.str();
}

} // namespace detail

inline nlohmann::json spectrum_json(const SpectrumRaw& raw, const DistinctSpectrum& s, const std::vector<double>& phis)
{
    nlohmann::json distinct = nlohmann::json::array();
    for (std::size_t i = 0; i <= s.d(); ++i)
        distinct.push_back({{"theta", s.thetas[i]}, {"mult", s.mults[i]}});
    return {
        {"raw", raw.values},
        {"distinct", distinct},
        {"d", s.d()},
        {"merge_threshold", s.merge_threshold},
        {"min_gap", detail::finite_or_null(s.min_gap)},
        {"phi", phis},
    };
}

inline nlohmann::json oracle_json(const OracleResult& r)
{
    if (const auto* ia = std::get_if<IntersectionArray>(&r))
        return {{"distance_regular", true}, {"intersection_array", {{"b", ia->b}, {"c", ia->c}, {"a", ia->a}}}};
    const auto& ref = std::get<OracleRefusal>(r);
    return {{"distance_regular", false}, {"reason", ref.reason}, {"u", ref.u}, {"v", ref.v}, {"distance", ref.distance}};
}

/// The versioned report document written by `drgspec analyze --json`.
///
/// Top-level keys: schema, tool, graph, tolerances, spectrum, predistance,
/// predistance_breakdown, hoffman, excess, oracle. `predistance` is null
/// (and `predistance_breakdown` a message) when the polynomials could not be
/// represented in double precision; `oracle` is null when not computed.
inline nlohmann::json report_json(const Analysis& a)
{
    using nlohmann::json;
    const auto& g = a.graph;
    const auto k = g.regular_degree();

    json graph = {
        {"n", g.order()},
        {"edges", g.size()},
        {"regular", k.has_value()},
        {"degree", k ? json(*k) : json(nullptr)},
        {"mean_degree", a.degrees.mean_degree},
        {"mean_square_degree", a.degrees.mean_square_degree},
    };

    json predistance = nullptr;
    if (a.system) {
        json polys = json::array();
        for (const auto& p : a.system->polys)
            polys.push_back(p.coeffs());
        predistance = {
            {"polynomials", polys},
            {"alpha", a.system->alpha},
            {"beta", a.system->beta},
            {"gamma", a.system->gamma},
        };
    }

    const auto& e = a.excess;
    json excess = {
        {"d", e.d},
        {"diameter", e.diameter},
        {"average_excess", e.average_excess},
        {"spectral_excess", e.spectral_excess},
        {"spectral_excess_eval", e.spectral_excess_eval ? json(*e.spectral_excess_eval) : json(nullptr)},
        {"per_vertex_excess", e.per_vertex_excess},
        {"distance_two_counts", a.distances.layer_sizes(2)},
        {"verdict", std::string(to_string(e.verdict))},
        {"equality_gap", e.equality_gap},
        {"relative_gap", e.relative_gap},
        {"identity_residuals", e.identity_residuals},
    };

    return {
        {"schema", kReportSchema},
        {"tool", {{"name", "drgspec"}, {"version", kToolVersion}}},
        {"graph", graph},
        {"tolerances", {{"eig", a.options.tol_eig}, {"eq", a.options.tol_eq}}},
        {"spectrum", spectrum_json(a.raw_spectrum, a.spectrum, a.phis)},
        {"predistance", predistance},
        {"predistance_breakdown", a.breakdown.empty() ? json(nullptr) : json(a.breakdown)},
        {"hoffman", {{"coefficients", a.hoffman.coeffs()}, {"residual", a.hoffman_residual}}},
        {"excess", excess},
        {"oracle", e.oracle ? oracle_json(*e.oracle) : json(nullptr)},
    };
}

inline std::string polynomial_text(const Polynomial& p, int precision = 10)
{
    if (p.is_zero())
        return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t k = 0; k < p.coeffs().size(); ++k) {
        const double c = p.coeffs()[k];
        if (c == 0.0)
            continue;
        if (first)
            os << (c < 0 ? "-" : "");
        else
            os << (c < 0 ? " - " : " + ");
        first = false;
        const std::string m = detail::num(std::abs(c), precision);
        const bool unit = k >= 1 && m == "1";
        if (!unit)
            os << m << (k >= 1 ? " " : "");
        if (k >= 1)
            os << "x";
        if (k >= 2)
            os << "^" << k;
    }
    return os.str();
}

inline std::string spectrum_text(const SpectrumRaw& raw, const DistinctSpectrum& s, const std::vector<double>& phis)
{
    std::ostringstream os;
    os << "raw eigenvalues:";
    for (double v : raw.values)
        os << ' ' << detail::num(v);
    os << "\n\n  i  theta_i            m_i  phi_i\n";
    for (std::size_t i = 0; i <= s.d(); ++i)
        os << "  " << std::left << std::setw(3) << i << std::setw(19) << detail::num(s.thetas[i], 15)
           << std::setw(5) << s.mults[i] << detail::num(phis[i], 15) << '\n';
    os << std::right << "\nd = " << s.d() << ", merge threshold " << detail::num(s.merge_threshold, 3)
       << ", min gap " << (std::isfinite(s.min_gap) ? detail::num(s.min_gap, 6) : std::string("n/a")) << '\n';
    return os.str();
}

/// Human-readable report. The recurrence table lists rows beta, alpha,
/// gamma against columns i = 0..d.
inline std::string report_text(const Analysis& a)
{
    std::ostringstream os;
    const auto& g = a.graph;
    const auto k = g.regular_degree();
    const auto& e = a.excess;

    os << "graph: n = " << g.order() << ", |E| = " << g.size() << ", "
       << (k ? "regular of degree " + std::to_string(*k) : std::string("not regular"))
       << ", mean degree " << detail::num(a.degrees.mean_degree) << ", mean square degree "
       << detail::num(a.degrees.mean_square_degree) << "\n\n";

    os << spectrum_text(a.raw_spectrum, a.spectrum, a.phis) << '\n';

    if (a.system) {
        const auto& sys = *a.system;
        const int w = 14;
        os << "recurrence  x r_i = beta_{i-1} r_{i-1} + alpha_i r_i + gamma_{i+1} r_{i+1}\n";
        os << "  " << std::left << std::setw(7) << "i";
        for (std::size_t i = 0; i <= sys.d(); ++i)
            os << std::setw(w) << i;
        os << "\n  " << std::setw(7) << "beta";
        for (std::size_t i = 0; i <= sys.d(); ++i)
            os << std::setw(w) << (i < sys.beta.size() ? detail::num(sys.beta[i], 8) : "");
        os << "\n  " << std::setw(7) << "alpha";
        for (std::size_t i = 0; i <= sys.d(); ++i)
            os << std::setw(w) << detail::num(sys.alpha[i], 8);
        os << "\n  " << std::setw(7) << "gamma";
        for (std::size_t i = 0; i <= sys.d(); ++i)
            os << std::setw(w) << (i == 0 ? "" : detail::num(sys.gamma_at(i), 8));
        os << std::right << "\n\npredistance polynomials\n";
        for (std::size_t i = 0; i <= sys.d(); ++i)
            os << "  r_" << i << " = " << polynomial_text(sys.polys[i]) << '\n';
    } else {
        os << "predistance polynomials unavailable: " << a.breakdown << '\n';
    }
    os << "  H   = " << polynomial_text(a.hoffman) << "   (max |H(L) - J| = " << detail::num(a.hoffman_residual, 3)
       << ")\n\n";

    os << "diameter D = " << e.diameter << ", d = " << e.d << '\n';
    os << "average excess   k_d = " << detail::num(e.average_excess, 15) << '\n';
    os << "spectral excess  r_d(0) = " << detail::num(e.spectral_excess, 15) << " (closed form)";
    if (e.spectral_excess_eval)
        os << ", " << detail::num(*e.spectral_excess_eval, 15) << " (evaluated)";
    os << "\nrelative gap " << detail::num(e.relative_gap, 6) << " (tolerance " << detail::num(a.options.tol_eq, 3)
       << ")\n";
    if (!e.identity_residuals.empty()) {
        os << "max |r_i(L) - A_i|:";
        for (double r : e.identity_residuals)
            os << ' ' << detail::num(r, 3);
        os << '\n';
    }
    os << "verdict: " << to_string(e.verdict) << '\n';

    if (e.oracle) {
        if (const auto* ia = std::get_if<IntersectionArray>(&*e.oracle)) {
            os << "oracle: distance-regular, intersection array {";
            for (std::size_t i = 0; i < ia->b.size(); ++i)
                os << (i ? "," : "") << ia->b[i];
            os << ";";
            for (std::size_t i = 0; i < ia->c.size(); ++i)
                os << (i ? "," : "") << ia->c[i];
            os << "}\n";
        } else {
            os << "oracle: not distance-regular (" << std::get<OracleRefusal>(*e.oracle).reason << ")\n";
        }
    }
    return os.str();
}

} // namespace drgspec

#endif // DRGSPEC_REPORT_HPP
