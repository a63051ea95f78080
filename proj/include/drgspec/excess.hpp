#ifndef DRGSPEC_EXCESS_HPP
#define DRGSPEC_EXCESS_HPP

#include "drgspec/errors.hpp"
#include "drgspec/graph.hpp"
#include "drgspec/orthopoly.hpp"
#include "drgspec/polynomial.hpp"
#include "drgspec/spectrum.hpp"
#include "drgspec/sym_matrix.hpp"

#include <array>
#include <cmath>
#include <cstddef>
#include <limits>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace drgspec {

enum class Verdict { distance_regular, not_distance_regular, inconclusive };

inline std::string_view to_string(Verdict v)
{
    switch (v) {
    case Verdict::distance_regular:
        return "distance_regular";
    case Verdict::not_distance_regular:
        return "not_distance_regular";
    case Verdict::inconclusive:
        return "inconclusive";
    }
    return "?";
}

/// {b_0..b_{D-1}; c_1..c_D} together with a_1..a_D.
struct IntersectionArray {
    std::vector<std::size_t> b;
    std::vector<std::size_t> c;
    std::vector<std::size_t> a;

    friend bool operator==(const IntersectionArray&, const IntersectionArray&) = default;
};

/// Why the combinatorial check rejected the graph. For a non-constant
/// intersection number, (u, v) is the first offending pair and i = dist(u, v).
struct OracleRefusal {
    std::string reason;
    Vertex u = 0;
    Vertex v = 0;
    std::size_t distance = 0;
};

using OracleResult = std::variant<IntersectionArray, OracleRefusal>;

inline bool is_distance_regular(const OracleResult& r) { return std::holds_alternative<IntersectionArray>(r); }

/// Brute-force distance-regularity test. For every ordered pair (u, v) at
/// distance i, counts the neighbours w of v with dist(u, w) = i-1, i, i+1;
/// the graph is distance-regular iff it is regular and these counts depend
/// only on i.
inline OracleResult drg_oracle(const Graph& g, const DistanceData& dd)
{
    if (!g.regular_degree()) {
        Vertex u = 1;
        while (g.degree(u) == g.degree(0))
            ++u;
        return OracleRefusal{"not regular: vertex 0 has degree " + std::to_string(g.degree(0)) + " but vertex " +
                                 std::to_string(u) + " has degree " + std::to_string(g.degree(u)),
                             0, u, 0};
    }

    const std::size_t diam = dd.diameter();
    struct Seen {
        std::array<std::size_t, 3> counts; // c, a, b
        Vertex u, v;
    };
    std::vector<std::optional<Seen>> per_distance(diam + 1);

    for (Vertex u = 0; u < g.order(); ++u) {
        for (Vertex v = 0; v < g.order(); ++v) {
            const std::size_t i = dd.distance(u, v);
            std::array<std::size_t, 3> counts{0, 0, 0};
            for (Vertex w : g.neighbors(v))
                ++counts[dd.distance(u, w) + 1 - i];
            auto& slot = per_distance[i];
            if (!slot) {
                slot = Seen{counts, u, v};
                continue;
            }
            if (slot->counts != counts) {
                const auto fmt = [](const std::array<std::size_t, 3>& x) {
                    return "(c=" + std::to_string(x[0]) + ", a=" + std::to_string(x[1]) + ", b=" + std::to_string(x[2]) + ")";
                };
                return OracleRefusal{"intersection numbers at distance " + std::to_string(i) + " differ: pair (" +
                                         std::to_string(u) + ", " + std::to_string(v) + ") has " + fmt(counts) +
                                         " but pair (" + std::to_string(slot->u) + ", " + std::to_string(slot->v) +
                                         ") has " + fmt(slot->counts),
                                     u, v, i};
            }
        }
    }

    IntersectionArray ia;
    for (std::size_t i = 0; i <= diam; ++i) {
        const auto& counts = per_distance[i]->counts;
        if (i < diam)
            ia.b.push_back(counts[2]);
        if (i > 0) {
            ia.c.push_back(counts[0]);
            ia.a.push_back(counts[1]);
        }
    }
    return ia;
}

/// k̄_d: mean over u of |Γ_d(u)|, zero when d exceeds the diameter.
/// Throws InternalError when d < D, which contradicts D <= d and points at a
/// misclustered spectrum.
inline double average_excess(const DistanceData& dd, std::size_t d)
{
    if (d < dd.diameter())
        throw InternalError("number of distinct eigenvalues minus one (d = " + std::to_string(d) +
                            ") is below the diameter D = " + std::to_string(dd.diameter()) +
                            "; the clustering tolerance likely merged distinct eigenvalues");
    double sum = 0.0;
    for (Vertex u = 0; u < dd.order(); ++u)
        sum += static_cast<double>(dd.layer_size(d, u));
    return sum / static_cast<double>(dd.order());
}

struct EvaluateOptions {
    double tol_eig = 1e-8; // relative eigenvalue clustering tolerance
    double tol_eq = 1e-6;  // relative equality tolerance for k̄_d vs r_d(0)
    bool run_oracle = true;
    std::size_t oracle_max_order = 2000;
};

struct ExcessReport {
    std::size_t d = 0;
    std::size_t diameter = 0;
    double average_excess = 0.0;
    /// r_d(0) from the closed form in φ_i and m_i.
    double spectral_excess = 0.0;
    /// r_d(0) by evaluating the constructed r_d; absent on NumericalBreakdown.
    std::optional<double> spectral_excess_eval;
    std::vector<std::size_t> per_vertex_excess;
    Verdict verdict = Verdict::inconclusive;
    double equality_gap = 0.0;
    double relative_gap = 0.0;
    /// max |r_i(L) − A_i| for i = 0..d; empty on NumericalBreakdown.
    std::vector<double> identity_residuals;
    std::optional<OracleResult> oracle;
};

/// Every intermediate of the spectral pipeline for one graph.
struct Analysis {
    Graph graph;
    EvaluateOptions options;
    SymMatrix laplacian;
    SpectrumRaw raw_spectrum;
    DistinctSpectrum spectrum;
    SpectralMeasure measure;
    std::vector<double> phis;
    /// Absent when the polynomials are not representable in double
    /// precision; `breakdown` then holds the reason. The verdict does not
    /// depend on it.
    std::optional<PredistanceSystem> system;
    std::string breakdown;
    Polynomial hoffman;
    /// max |H(L) − J| with H(L) formed as the product (n/φ_0) ∏ (L − θ_i I)
    double hoffman_residual;
    DistanceData distances;
    DegreeStats degrees;
    ExcessReport excess;
};

namespace detail {

inline Verdict classify(double relative_gap, double tol_eq)
{
    if (relative_gap <= tol_eq)
        return Verdict::distance_regular;
    if (relative_gap >= 10.0 * tol_eq)
        return Verdict::not_distance_regular;
    return Verdict::inconclusive;
}

inline ExcessReport excess_report(const Analysis& a)
{
    const std::size_t d = a.spectrum.d();
    ExcessReport r;
    r.d = d;
    r.diameter = a.distances.diameter();
    r.average_excess = average_excess(a.distances, d);
    r.per_vertex_excess = a.distances.layer_sizes(d);
    r.spectral_excess = spectral_excess_closed_form(a.measure, a.phis);
    if (a.system)
        r.spectral_excess_eval = eval_scalar(a.system->polys.back(), 0.0);
    r.equality_gap = r.spectral_excess - r.average_excess;
    r.relative_gap = r.equality_gap / r.spectral_excess;
    if (r.relative_gap < -10.0 * a.options.tol_eq)
        throw InternalError("average excess " + std::to_string(r.average_excess) + " exceeds spectral excess " +
                            std::to_string(r.spectral_excess) + " beyond tolerance");
    r.verdict = classify(r.relative_gap, a.options.tol_eq);

    if (a.system) {
        const auto powers = eval_matrix_all(*a.system, a.laplacian);
        for (std::size_t i = 0; i <= d; ++i)
            r.identity_residuals.push_back(max_abs_diff(powers[i], a.distances.distance_matrix(i)));
    }

    if (a.options.run_oracle && a.graph.order() <= a.options.oracle_max_order) {
        r.oracle = drg_oracle(a.graph, a.distances);
        if (r.verdict == Verdict::distance_regular && !is_distance_regular(*r.oracle))
            throw InternalError("spectral verdict is distance_regular but the combinatorial check refused: " +
                                std::get<OracleRefusal>(*r.oracle).reason);
    }
    return r;
}

} // namespace detail

/// Runs the whole pipeline: Laplacian, eigenvalues, clustering, predistance
/// polynomials, both routes to r_d(0), k̄_d, verdict, the residuals max|r_i(L) − A_i| and
/// (optionally) the combinatorial oracle. The verdict uses the closed form
/// for r_d(0), so it survives a NumericalBreakdown of the polynomials.
///
/// The verdict is distance_regular when (r_d(0) − k̄_d) / r_d(0) <= tol_eq,
/// not_distance_regular when it is >= 10 tol_eq, inconclusive in between.
inline Analysis analyze(const Graph& g, const EvaluateOptions& opts = {})
{
    SymMatrix lap = laplacian_matrix(g);
    SpectrumRaw raw = eigenvalues_sym(lap);
    DistinctSpectrum spec = cluster_spectrum(raw, opts.tol_eig);
    SpectralMeasure mu(spec);
    auto phis = phi_products(spec);
    std::optional<PredistanceSystem> sys;
    std::string breakdown;
    try {
        sys = predistance_system(mu);
    } catch (const NumericalBreakdown& e) {
        breakdown = e.what();
    }
    Polynomial h = hoffman_polynomial(mu);
    SymMatrix h_of_l = idempotent(lap, spec, 0);
    h_of_l *= static_cast<double>(g.order());
    const double h_res = max_abs_diff(h_of_l, SymMatrix::filled(g.order(), 1.0));

    Analysis a{g,
               opts,
               std::move(lap),
               std::move(raw),
               std::move(spec),
               std::move(mu),
               std::move(phis),
               std::move(sys),
               std::move(breakdown),
               std::move(h),
               h_res,
               DistanceData(g),
               degree_stats(g),
               {}};
    a.excess = detail::excess_report(a);
    return a;
}

inline ExcessReport evaluate_theorem(const Graph& g, const EvaluateOptions& opts = {})
{
    return analyze(g, opts).excess;
}

/// Distance polynomials of a k-regular graph: p_i(x) = r_i(k − x).
inline std::vector<Polynomial> adjacency_distance_polys(const PredistanceSystem& sys, std::size_t k)
{
    std::vector<Polynomial> out;
    for (const auto& r : sys.polys)
        out.push_back(compose_affine(r, static_cast<double>(k), -1.0));
    return out;
}

/// Checked variant: throws std::invalid_argument on a non-regular graph.
inline std::vector<Polynomial> adjacency_distance_polys(const PredistanceSystem& sys, const Graph& g)
{
    const auto k = g.regular_degree();
    if (!k)
        throw std::invalid_argument("adjacency distance polynomials need a regular graph");
    return adjacency_distance_polys(sys, *k);
}

struct ThreeEigenvalueDiagnostic {
    double mean_degree = 0.0;
    double mean_square_degree = 0.0;
    double variance_gap = 0.0; // mean(k²) − mean(k)², zero iff regular
    bool regular = false;
    double gamma1 = 0.0;         // from the recurrence
    double gamma1_formula = 0.0; // −1 + k̄ − mean(k²)/k̄
    Verdict variance_verdict = Verdict::inconclusive;
    Verdict theorem_verdict = Verdict::inconclusive;
};

/// For graphs with exactly three distinct Laplacian eigenvalues, the bound
/// k̄_2 <= r_2(0) reduces to γ_1 <= −1, i.e. mean(k²) >= k̄², so such a graph
/// is distance-regular iff it is regular. Reports both sides of that
/// equivalence. Throws std::domain_error when d != 2 and InternalError when a
/// conclusive theorem verdict contradicts the degree test.
inline ThreeEigenvalueDiagnostic three_eigenvalue_diagnostic(const Analysis& a)
{
    if (a.spectrum.d() != 2)
        throw std::domain_error("three-eigenvalue diagnostic needs d = 2, got d = " + std::to_string(a.spectrum.d()));
    ThreeEigenvalueDiagnostic out;
    out.mean_degree = a.degrees.mean_degree;
    out.mean_square_degree = a.degrees.mean_square_degree;
    out.variance_gap = out.mean_square_degree - out.mean_degree * out.mean_degree;
    out.regular = a.graph.regular_degree().has_value();
    out.gamma1 = a.system ? a.system->gamma_at(1) : std::numeric_limits<double>::quiet_NaN();
    out.gamma1_formula = -1.0 + out.mean_degree - out.mean_square_degree / out.mean_degree;
    out.variance_verdict = out.regular ? Verdict::distance_regular : Verdict::not_distance_regular;
    out.theorem_verdict = a.excess.verdict;
    if (out.theorem_verdict != Verdict::inconclusive && out.theorem_verdict != out.variance_verdict)
        throw InternalError("three-eigenvalue graph: spectral verdict " + std::string(to_string(out.theorem_verdict)) +
                            " contradicts the degree-variance test");
    return out;
}

inline ThreeEigenvalueDiagnostic three_eigenvalue_diagnostic(const Graph& g, const EvaluateOptions& opts = {})
{
    return three_eigenvalue_diagnostic(analyze(g, opts));
}

} // namespace drgspec

#endif // DRGSPEC_EXCESS_HPP
