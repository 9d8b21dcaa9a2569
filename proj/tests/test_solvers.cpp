#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <string>

#include "radvar/solvers.hpp"
#include "radvar/specfun.hpp"
#include "radvar/tables.hpp"

using radvar::Convention;
using radvar::DSelection;
using radvar::PotentialSpec;
using radvar::QuantumState;
using radvar::TableId;

TEST_CASE("physical energies scale covariantly with the coupling") {
    for (double nu : {-1.5, 0.5, 1.0, 2.0}) {
        const int sign = nu < 0.0 ? -1 : +1;
        const QuantumState state{1, 1};
        const double base =
            radvar::power_law_eigenvalue(PotentialSpec::power_law(1.0, nu, sign), state).E;
        for (double A : {0.5, 2.0, 7.0}) {
            const double scaled =
                radvar::power_law_eigenvalue(PotentialSpec::power_law(A, nu, sign), state).E;
            CHECK(scaled ==
                  doctest::Approx(base * std::pow(A, 2.0 / (nu + 2.0))).epsilon(1e-12));
        }
    }
}

TEST_CASE("the alternative unit convention rescales by an exact factor") {
    const PotentialSpec pot = PotentialSpec::power_law(std::pow(2.0, 1.7), -0.2, -1);
    const QuantumState state{2, 1};
    const double plain = radvar::power_law_eigenvalue(pot, state, {}, Convention::Plain).E;
    const double alt = radvar::power_law_eigenvalue(pot, state, {}, Convention::Ref11).E;
    CHECK(alt == doctest::Approx(plain * std::pow(2.0, 0.2 / 1.8)).epsilon(1e-14));
}

TEST_CASE("solve_reduced reports self-consistent parameters") {
    const QuantumState state{2, 1};
    const radvar::ReducedEigenvalue sol = radvar::solve_reduced(state, 1.0, +1);
    CHECK(sol.epsilon ==
          doctest::Approx(radvar::epsilon_of(sol.params.x, sol.params.d, state, 1.0, +1))
              .epsilon(1e-13));
    CHECK(sol.params.d == doctest::Approx(radvar::d_fitted(1.0)).epsilon(1e-13));
}

TEST_CASE("fixed d selection is honored") {
    const radvar::ReducedEigenvalue sol =
        radvar::solve_reduced(QuantumState{0, 0}, 2.0, +1, DSelection::fixed(2.0));
    CHECK(sol.params.d == doctest::Approx(2.0));
    CHECK(sol.epsilon == doctest::Approx(3.0).epsilon(1e-12));
}

TEST_CASE("linear potential table pairs energies with Airy zeros") {
    const auto rows = radvar::linear_potential_table(5);
    REQUIRE(rows.size() == 6);
    for (size_t i = 0; i < rows.size(); ++i) {
        CHECK(rows[i].n == static_cast<int>(i));
        CHECK(rows[i].epsilon_exact ==
              doctest::Approx(radvar::airy_zero(static_cast<int>(i) + 1)).epsilon(1e-12));
        // A single fixed-n trial function is only a guaranteed upper bound for
        // the ground state; the excited rows track the zeros to a few 1e-3
        // without bracketing them from above.
        CHECK(std::abs(rows[i].epsilon_variational - rows[i].epsilon_exact) <= 5e-3);
    }
    CHECK(rows[0].epsilon_variational >= rows[0].epsilon_exact - 1e-9);
}

TEST_CASE("log potential matches its power-law limit construction") {
    const radvar::PhysicalEigenvalue sol = radvar::log_eigenvalue(QuantumState{0, 0});
    CHECK(sol.E == doctest::Approx(1.0445296).epsilon(5e-5));
    const double tighter = radvar::log_eigenvalue(QuantumState{0, 0}, 1e-6).E;
    CHECK(std::abs(sol.E - tighter) <= 1e-3);
}

TEST_CASE("log potential coordinate scale follows the coupling") {
    const double nu = 1e-5;
    CHECK(radvar::log_rho_scale(nu) ==
          doctest::Approx(std::pow(nu, 1.0 / (nu + 2.0))).epsilon(1e-12));
}

TEST_CASE("energies grow with node count and angular momentum") {
    double prev = -1e9;
    for (int n = 0; n <= 5; ++n) {
        const double E =
            radvar::power_law_eigenvalue(PotentialSpec::power_law(1.0, 1.0, +1),
                                         QuantumState{n, 0})
                .E;
        CHECK(E > prev);
        prev = E;
    }
    prev = -1e9;
    for (int l = 0; l <= 5; ++l) {
        const double E = radvar::log_eigenvalue(QuantumState{0, l}).E;
        CHECK(E > prev);
        prev = E;
    }
}

TEST_CASE("table ids round-trip through names") {
    for (const TableId id : radvar::all_table_ids()) {
        const auto parsed = radvar::parse_table_id(radvar::table_name(id));
        REQUIRE(parsed.has_value());
        CHECK(*parsed == id);
    }
    CHECK(radvar::parse_table_id("table1") == TableId::Table1);
    // Case folding lives in the command line layer, not here.
    CHECK_FALSE(radvar::parse_table_id("TABLE2A").has_value());
    CHECK_FALSE(radvar::parse_table_id("bogus").has_value());
}

TEST_CASE("table presets carry the published row counts") {
    CHECK(radvar::table_definition(TableId::Table1).cells.size() == 16);
    CHECK(radvar::table_definition(TableId::Table2a).cells.size() == 12);
    CHECK(radvar::table_definition(TableId::Table2b).cells.size() == 12);
    CHECK(radvar::table_definition(TableId::Table3).cells.size() == 6);
    CHECK(radvar::table_definition(TableId::Table4).cells.size() == 25);
    CHECK(radvar::table_definition(TableId::Table5).cells.size() == 24);
}

TEST_CASE("tables one through four reproduce their reference columns") {
    for (const TableId id :
         {TableId::Table1, TableId::Table2a, TableId::Table2b, TableId::Table3,
          TableId::Table4}) {
        const radvar::TableResult result = radvar::compute_table(id);
        CAPTURE(radvar::table_name(id));
        CAPTURE(result.first_failure);
        CHECK(result.primary_ok);
        CHECK(result.reference_ok);
    }
}

TEST_CASE("the log table differs from its published column in one known cell") {
    const radvar::TableResult result = radvar::compute_table(TableId::Table5);
    CHECK(result.reference_ok);
    CHECK_FALSE(result.primary_ok);
    CHECK(result.first_failure.find("n=10 l=0") != std::string::npos);

    int failures = 0;
    for (const auto& row : result.rows) {
        const double diff = std::abs(row.value_this_work - row.cell.value_paper);
        if (row.cell.n == 10 && row.cell.l == 0) {
            // Regression anchors: the computed value is stable; the published
            // cell sits 1.55e-3 away, beyond the 5e-4 gate.
            CHECK(row.value_this_work == doctest::Approx(3.639547).epsilon(5e-5 / 3.64));
            CHECK(diff == doctest::Approx(1.55e-3).epsilon(0.15));
            ++failures;
        } else {
            CHECK(diff <= radvar::table_definition(TableId::Table5).tol_primary);
        }
    }
    CHECK(failures == 1);
}

TEST_CASE("skipping the oracle column leaves it unset") {
    const radvar::TableResult result = radvar::compute_table(TableId::Table3, false);
    CHECK(result.primary_ok);
    for (const auto& row : result.rows) {
        CHECK(std::isnan(row.value_oracle));
    }
}
