#include "drgspec/generators.hpp"
#include "drgspec/graph.hpp"
#include "drgspec/orthopoly.hpp"
#include "drgspec/spectrum.hpp"

#include "corpus.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <random>

namespace drgspec {
namespace {

SpectralMeasure measure_of(const Graph& g)
{
    return SpectralMeasure(cluster_spectrum(eigenvalues_sym(laplacian_matrix(g)), 1e-8));
}

void expect_coeffs_near(const Polynomial& p, std::vector<double> expected, double tol)
{
    EXPECT_LE(max_abs_coeff_diff(p, Polynomial(std::move(expected))), tol) << "got degree " << p.degree();
}

// x r_i - (β_{i-1} r_{i-1} + α_i r_i + γ_{i+1} r_{i+1}) as a polynomial.
Polynomial recurrence_defect(const PredistanceSystem& sys, std::size_t i)
{
    Polynomial rhs = sys.alpha[i] * sys.polys[i];
    if (i > 0)
        rhs += sys.beta_at(i - 1) * sys.polys[i - 1];
    if (i < sys.d())
        rhs += sys.gamma_at(i + 1) * sys.polys[i + 1];
    return sys.polys[i].shifted() - rhs;
}

TEST(SpectralMeasure, Validation)
{
    EXPECT_THROW(SpectralMeasure({}, {}), std::invalid_argument);
    EXPECT_THROW(SpectralMeasure({0.1, 2.0}, {1, 1}), std::invalid_argument);
    EXPECT_THROW(SpectralMeasure({0.0, 2.0, 2.0}, {1, 1, 1}), std::invalid_argument);
    EXPECT_THROW(SpectralMeasure({0.0, 2.0}, {1, 0}), std::invalid_argument);
    EXPECT_THROW(SpectralMeasure({0.0, 2.0}, {1}), std::invalid_argument);
    EXPECT_EQ(SpectralMeasure({0.0, 2.0, 5.0}, {1, 5, 4}).order(), 10u);
}

TEST(InnerProduct, Examples)
{
    const auto p4 = measure_of(path_graph(4));
    const auto pet = measure_of(petersen_graph());
    EXPECT_NEAR(inner_product(Polynomial::constant(1), Polynomial::constant(1), p4), 1.0, 1e-15);
    EXPECT_NEAR(inner_product(Polynomial::constant(1), Polynomial::constant(1), pet), 1.0, 1e-15);
    EXPECT_NEAR(inner_product(Polynomial::x(), Polynomial::constant(1), p4), 1.5, 1e-14);
    const Polynomial r1{9.0 / 7.0, -6.0 / 7.0};
    EXPECT_NEAR(inner_product(r1, r1, p4), 9.0 / 7.0, 1e-12);
}

TEST(Predistance, PathOnFourPolynomials)
{
    const auto sys = predistance_system(measure_of(path_graph(4)));
    ASSERT_EQ(sys.d(), 3u);
    expect_coeffs_near(sys.polys[0], {1.0}, 1e-12);
    expect_coeffs_near(sys.polys[1], {9.0 / 7.0, -6.0 / 7.0}, 1e-8);
    expect_coeffs_near(sys.polys[2], {32.0 / 35.0, -96.0 / 35.0, 4.0 / 5.0}, 1e-8);
    expect_coeffs_near(sys.polys[3], {4.0 / 5.0, -32.0 / 5.0, 26.0 / 5.0, -1.0}, 1e-8);
}

TEST(Predistance, PathOnFourRecurrenceTable)
{
    const auto sys = predistance_system(measure_of(path_graph(4)));
    const double beta[] = {-3.0 / 2.0, -16.0 / 21.0, -7.0 / 10.0};
    const double alpha[] = {3.0 / 2.0, 27.0 / 14.0, 62.0 / 35.0, 4.0 / 5.0};
    const double gamma[] = {-7.0 / 6.0, -15.0 / 14.0, -4.0 / 5.0};
    ASSERT_EQ(sys.beta.size(), 3u);
    ASSERT_EQ(sys.alpha.size(), 4u);
    ASSERT_EQ(sys.gamma.size(), 3u);
    for (int i = 0; i < 3; ++i) {
        EXPECT_NEAR(sys.beta[i], beta[i], 1e-8);
        EXPECT_NEAR(sys.gamma[i], gamma[i], 1e-8);
    }
    for (int i = 0; i < 4; ++i)
        EXPECT_NEAR(sys.alpha[i], alpha[i], 1e-8);
}

TEST(Predistance, SingleVertex)
{
    const auto sys = predistance_system(SpectralMeasure({0.0}, {1}));
    ASSERT_EQ(sys.d(), 0u);
    EXPECT_EQ(sys.polys[0], Polynomial::constant(1.0));
    EXPECT_TRUE(sys.beta.empty());
    EXPECT_TRUE(sys.gamma.empty());
    EXPECT_EQ(hoffman_polynomial(SpectralMeasure({0.0}, {1})), Polynomial::constant(1.0));
}

TEST(Predistance, PetersenAndCompleteGraph)
{
    const auto pet = predistance_system(measure_of(petersen_graph()));
    expect_coeffs_near(pet.polys[2], {6.0, -6.0, 1.0}, 1e-10);
    const double alpha[] = {3, 3, 1};
    for (int i = 0; i < 3; ++i)
        EXPECT_NEAR(pet.alpha[i], alpha[i], 1e-10);
    EXPECT_NEAR(pet.beta[0], -3.0, 1e-10);
    EXPECT_NEAR(pet.beta[1], -2.0, 1e-10);
    EXPECT_NEAR(pet.gamma[0], -1.0, 1e-10);
    EXPECT_NEAR(pet.gamma[1], -1.0, 1e-10);

    const auto k4 = predistance_system(measure_of(complete_graph(4)));
    expect_coeffs_near(k4.polys[1], {3.0, -1.0}, 1e-12);
}

TEST(Hoffman, Examples)
{
    const auto p4 = measure_of(path_graph(4));
    const Polynomial h = hoffman_polynomial(p4);
    expect_coeffs_near(h, {4.0, -10.0, 6.0, -1.0}, 1e-12);
    EXPECT_NEAR(eval_scalar(h, 0.0), 4.0, 1e-12);
    EXPECT_NEAR(max_abs_diff(eval_matrix(h, laplacian_matrix(path_graph(4))), SymMatrix::filled(4, 1.0)), 0.0, 1e-8);
    expect_coeffs_near(hoffman_polynomial(measure_of(path_graph(2))), {2.0, -1.0}, 1e-12);
}

TEST(ClosedForm, Examples)
{
    EXPECT_NEAR(spectral_excess_closed_form(measure_of(path_graph(4))), 0.8, 1e-12);
    EXPECT_NEAR(spectral_excess_closed_form(SpectralMeasure({0.0, 2.0, 5.0}, {1, 5, 4})), 6.0, 1e-12);
    EXPECT_NEAR(spectral_excess_closed_form(SpectralMeasure({0.0, 3.0}, {1, 2})), 2.0, 1e-12);
}

TEST(EvalMatrix, PetersenDistanceTwo)
{
    const Graph g = petersen_graph();
    const auto sys = predistance_system(measure_of(g));
    const DistanceData dd(g);
    const SymMatrix lap = laplacian_matrix(g);
    EXPECT_LE(max_abs_diff(eval_matrix(sys.polys[2], lap), dd.distance_matrix(2)), 1e-8);
    EXPECT_EQ(eval_matrix(Polynomial::x(), lap), lap);
    const auto all = eval_matrix_all(sys, lap);
    for (std::size_t i = 0; i <= 2; ++i)
        EXPECT_LE(max_abs_diff(all[i], dd.distance_matrix(i)), 1e-8);
}

// Every structural property of the system, on one graph.
void check_system(const Graph& g, const SpectralMeasure& mu, const PredistanceSystem& sys)
{
    const std::size_t d = sys.d();
    ASSERT_EQ(d, mu.d());
    ASSERT_EQ(sys.alpha.size(), d + 1);
    ASSERT_EQ(sys.beta.size(), d);
    ASSERT_EQ(sys.gamma.size(), d);

    for (std::size_t i = 0; i <= d; ++i) {
        EXPECT_EQ(sys.polys[i].degree(), static_cast<int>(i));
        const double ri0 = eval_scalar(sys.polys[i], 0.0);
        EXPECT_GT(ri0, 0.0);
        EXPECT_LE(std::abs(inner_product(sys.polys[i], sys.polys[i], mu) - ri0), 1e-8 * std::max(1.0, ri0));
        for (std::size_t j = 0; j < i; ++j)
            EXPECT_LE(std::abs(inner_product(sys.polys[i], sys.polys[j], mu)), 1e-8);

        EXPECT_LE(std::abs(sys.alpha[i] + sys.beta_at(i) + sys.gamma_at(i)), 1e-8);
        if (i < d) {
            EXPECT_LT(sys.beta[i], -1e-10);
            EXPECT_LT(sys.gamma[i], -1e-10);
            EXPECT_LE(max_abs_coeff_diff(recurrence_defect(sys, i), Polynomial()), 1e-8) << "i = " << i;
        }
        // At i = d the defect is a multiple of prod (x - θ_j): zero on the nodes.
        for (double v : mu.values(recurrence_defect(sys, i)))
            EXPECT_LE(std::abs(v), 1e-8 * std::max(1.0, std::pow(mu.thetas().back(), static_cast<double>(i + 1))));
    }

    Polynomial sum;
    for (const auto& r : sys.polys)
        sum += r;
    EXPECT_LE(max_abs_coeff_diff(hoffman_polynomial(mu) - sum, Polynomial()), 1e-8);

    const double rd0 = eval_scalar(sys.polys.back(), 0.0);
    EXPECT_LE(std::abs(spectral_excess_closed_form(mu) - rd0), 1e-8 * std::max(1.0, rd0));

    const auto deg = degree_stats(g);
    EXPECT_NEAR(sys.alpha[0], deg.mean_degree, 1e-8);
    if (d >= 1) {
        EXPECT_NEAR(sys.gamma_at(1), -1.0 + deg.mean_degree - deg.mean_square_degree / deg.mean_degree, 1e-8);
    }
}

TEST(PredistanceProperties, HoldOnCorpus)
{
    for (const auto& [name, g] : testing::full_corpus()) {
        SCOPED_TRACE(name);
        const auto mu = measure_of(g);
        check_system(g, mu, predistance_system(mu));
    }
}

// Dual route for the recurrence: the Stieltjes coefficients a_i, b_i of the
// monic family are recomputed here from scratch by explicit Gram-Schmidt on
// the nodes, and the r-basis α, β, γ must follow from them via
// r_i = c_i q_i: α_i = a_i, β_{i-1} = b_i c_i / c_{i-1}, γ_{i+1} = c_i / c_{i+1}.
TEST(PredistanceProperties, RecurrenceMatchesMonicRoute)
{
    for (const Graph& g : {path_graph(4), petersen_graph(), star_graph(3), cycle_graph(7), hypercube_graph(3)}) {
        const auto mu = measure_of(g);
        const auto sys = predistance_system(mu);
        const std::size_t d = mu.d();
        const auto& th = mu.thetas();

        std::vector<std::vector<double>> q{std::vector<double>(d + 1, 1.0)};
        std::vector<double> q0{1.0}; // q_i(0), tracked through the recurrence
        std::vector<double> a, b;
        for (std::size_t i = 0; i <= d; ++i) {
            const double nq = mu.dot(q[i], q[i]);
            std::vector<double> xq(d + 1);
            for (std::size_t j = 0; j <= d; ++j)
                xq[j] = th[j] * q[i][j];
            a.push_back(mu.dot(xq, q[i]) / nq);
            b.push_back(i == 0 ? 0.0 : nq / mu.dot(q[i - 1], q[i - 1]));
            if (i == d)
                break;
            std::vector<double> next(d + 1);
            for (std::size_t j = 0; j <= d; ++j)
                next[j] = xq[j] - a[i] * q[i][j] - (i ? b[i] * q[i - 1][j] : 0.0);
            q0.push_back(-a[i] * q0[i] - (i ? b[i] * q0[i - 1] : 0.0));
            q.push_back(std::move(next));
        }
        std::vector<double> c;
        for (std::size_t i = 0; i <= d; ++i)
            c.push_back(q0[i] / mu.dot(q[i], q[i]));

        for (std::size_t i = 0; i <= d; ++i) {
            EXPECT_NEAR(sys.alpha[i], a[i], 1e-9);
            if (i > 0) {
                EXPECT_NEAR(sys.beta[i - 1], b[i] * c[i] / c[i - 1], 1e-9);
            }
            if (i < d) {
                EXPECT_NEAR(sys.gamma[i], c[i] / c[i + 1], 1e-9);
            }
        }
    }
}

// Random connected graphs with n <= 30: the system either satisfies all
// invariants or the construction refuses with NumericalBreakdown. For
// d <= 10 a refusal is a failure.
TEST(PredistanceProperties, RandomGraphs)
{
    std::mt19937_64 rng(20240611);
    std::size_t built = 0, refused = 0;
    for (int t = 0; t < 300; ++t) {
        const std::size_t n = 2 + t % 29;
        const double p = std::uniform_real_distribution<double>(0.05, 0.9)(rng);
        const Graph g = testing::random_connected_graph(rng, n, p);
        const auto mu = measure_of(g);
        SCOPED_TRACE("n = " + std::to_string(n) + ", d = " + std::to_string(mu.d()));
        try {
            const auto sys = predistance_system(mu);
            ++built;
            check_system(g, mu, sys);
        } catch (const NumericalBreakdown&) {
            ++refused;
            EXPECT_GE(mu.d(), 11u);
        }
    }
    EXPECT_GT(built, 100u);
    RecordProperty("refused", static_cast<int>(refused));
}

} // namespace
} // namespace drgspec
