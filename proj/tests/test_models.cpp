#include <cmath>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include <doctest.h>

#include "fdea/io.hpp"
#include "fdea/models.hpp"
#include "oracles.hpp"

using fdea::BoundEfficiencies;
using fdea::DMUDataset;
using fdea::DMURecord;
using fdea::ModelInfeasible;
using fdea::ModelMode;
using fdea::Orientation;
using fdea::TFN;

namespace {

DMUDataset tiny_crisp(std::vector<std::pair<double, double>> xy) {
    DMUDataset d;
    d.input_names = {"x"};
    d.output_names = {"y"};
    int i = 0;
    for (auto [x, y] : xy) {
        DMURecord r;
        r.id = std::string(1, static_cast<char>('A' + i++));
        r.label = "unit " + r.id;
        r.inputs = {TFN::crisp(x)};
        r.outputs = {TFN::crisp(y)};
        d.dmus.push_back(std::move(r));
    }
    return d;
}

DMUDataset bundled(const char* name) {
    return fdea::load_dataset_auto(std::string(FDEA_DATA_DIR) + "/" + name);
}

void check_bounds(const BoundEfficiencies& b, double lo, double mid, double hi,
                  double tol = 1e-6) {
    CHECK(b.lo == doctest::Approx(lo).epsilon(tol));
    CHECK(b.mid == doctest::Approx(mid).epsilon(tol));
    CHECK(b.hi == doctest::Approx(hi).epsilon(tol));
}

}  // namespace

TEST_SUITE_BEGIN("models");

TEST_CASE("single-ratio crisp efficiencies") {
    const auto data = tiny_crisp({{1, 1}, {2, 1}});
    CHECK(fdea::crisp_optimistic(data, 0, 1e-6).first == doctest::Approx(1.0));
    CHECK(fdea::crisp_optimistic(data, 1, 1e-6).first == doctest::Approx(0.5));
    CHECK(fdea::crisp_pessimistic(data, 0, 1e-6).first == doctest::Approx(2.0));
    CHECK(fdea::crisp_pessimistic(data, 1, 1e-6).first == doctest::Approx(1.0));
}

TEST_CASE("a lone DMU is efficient from both sides") {
    const auto data = tiny_crisp({{3.7, 2.9}});
    CHECK(fdea::crisp_optimistic(data, 0, 1e-6).first == doctest::Approx(1.0));
    CHECK(fdea::crisp_pessimistic(data, 0, 1e-6).first == doctest::Approx(1.0));
}

TEST_CASE("crisp efficiencies match the closed ratio form") {
    std::mt19937_64 gen(1001);
    for (int trial = 0; trial < 40; ++trial) {
        const auto data =
            oracles::random_dataset(gen, 2 + trial % 5, 1, 1, /*crisp=*/true);
        for (std::size_t k = 0; k < data.size(); ++k) {
            const auto ref_o = oracles::single_ratio_optimistic(data, k);
            const auto ref_p = oracles::single_ratio_pessimistic(data, k);
            CHECK(fdea::crisp_optimistic(data, k, 1e-9).first ==
                  doctest::Approx(ref_o.mid).epsilon(1e-7));
            CHECK(fdea::crisp_pessimistic(data, k, 1e-9).first ==
                  doctest::Approx(ref_p.mid).epsilon(1e-7));
        }
    }
}

TEST_CASE("crisp builders reject fuzzy data") {
    DMUDataset d = tiny_crisp({{1, 1}, {2, 1}});
    d.dmus[0].inputs[0] = TFN(0.9, 1.0, 1.1);
    CHECK_THROWS_AS(fdea::crisp_optimistic(d, 0, 1e-6), std::invalid_argument);
    CHECK_THROWS_AS(fdea::crisp_pessimistic(d, 0, 1e-6), std::invalid_argument);
}

TEST_CASE("fuzzy bound triples match the closed ratio form") {
    std::mt19937_64 gen(1002);
    for (int trial = 0; trial < 40; ++trial) {
        const auto data =
            oracles::random_dataset(gen, 2 + trial % 5, 1, 1, /*crisp=*/false);
        for (std::size_t k = 0; k < data.size(); ++k) {
            const auto ref_o = oracles::single_ratio_optimistic(data, k);
            const auto o = fdea::optimistic_bounds(data, k, 1e-9);
            check_bounds(o, ref_o.lo, ref_o.mid, ref_o.hi, 1e-9);
            const auto ref_p = oracles::single_ratio_pessimistic(data, k);
            const auto p = fdea::pessimistic_bounds(data, k, 1e-9);
            check_bounds(p, ref_p.lo, ref_p.mid, ref_p.hi, 1e-9);
        }
    }
}

TEST_CASE("bundled example: optimistic bound triples are stable") {
    const auto data = bundled("guo_tanaka.csv");
    check_bounds(fdea::optimistic_bounds(data, 0, 1e-5), 0.6238989777, 0.7455263979,
                 0.8952264001);
    check_bounds(fdea::optimistic_bounds(data, 1, 1e-5), 0.8358127136, 0.8802735427,
                 0.9639796801);
    check_bounds(fdea::optimistic_bounds(data, 2, 1e-5), 0.5508368665, 0.7440583549, 1.0);
    check_bounds(fdea::optimistic_bounds(data, 3, 1e-5), 0.7830391932, 0.8820866522, 1.0);
    check_bounds(fdea::optimistic_bounds(data, 4, 1e-5), 0.6314503151, 0.7987150241, 1.0);
}

TEST_CASE("bundled example: pessimistic bound triples are stable") {
    const auto data = bundled("guo_tanaka.csv");
    check_bounds(fdea::pessimistic_bounds(data, 0, 1e-5), 1.0604673767, 1.2872111314,
                 1.5787386153);
    check_bounds(fdea::pessimistic_bounds(data, 1, 1e-5), 1.4290311091, 1.5156392374,
                 1.5172465453);
    check_bounds(fdea::pessimistic_bounds(data, 2, 1e-5), 1.0, 1.3061240824, 1.6818223670);
    check_bounds(fdea::pessimistic_bounds(data, 3, 1e-5), 1.0416835880, 1.4009775588,
                 1.7460448254);
    check_bounds(fdea::pessimistic_bounds(data, 4, 1e-5), 1.0, 1.2743119609, 1.6229595949);
}

TEST_CASE("institute dataset: spot-checked bound triples") {
    const auto data = bundled("iim.csv");
    check_bounds(fdea::optimistic_bounds(data, data.index_of("D1"), 1e-5), 0.3177576506,
                 0.4396215827, 0.8944511940);
    check_bounds(fdea::optimistic_bounds(data, data.index_of("D3"), 1e-5), 0.4164672088,
                 0.4908159224, 0.7693441233);
    check_bounds(fdea::optimistic_bounds(data, data.index_of("D8"), 1e-5), 0.1953388631,
                 0.3740860278, 1.0);
    check_bounds(fdea::optimistic_bounds(data, data.index_of("D13"), 1e-5), 0.3511319374,
                 0.5274459762, 1.0);
    check_bounds(fdea::pessimistic_bounds(data, data.index_of("D1"), 1e-5), 1.7815478335,
                 2.4402865351, 3.8597477569);
    check_bounds(fdea::pessimistic_bounds(data, data.index_of("D3"), 1e-5), 1.9822875194,
                 2.7294046431, 4.2707486049);
    check_bounds(fdea::pessimistic_bounds(data, data.index_of("D8"), 1e-5), 1.0,
                 2.1155147948, 5.6459288394);
    check_bounds(fdea::pessimistic_bounds(data, data.index_of("D13"), 1e-5), 1.5785705422,
                 2.5459868682, 4.3635161820);
}

TEST_CASE("mid-slice crisp efficiencies of the bundled example") {
    const auto fuzzy = bundled("guo_tanaka.csv");
    DMUDataset crisp = fuzzy;
    for (auto& d : crisp.dmus) {
        for (auto& t : d.inputs) t = TFN::crisp(t.mid);
        for (auto& t : d.outputs) t = TFN::crisp(t.mid);
    }
    const double opt[] = {0.8548163010, 1.0, 0.8607955962, 1.0, 1.0};
    const double pess[] = {1.0, 1.1671093236, 1.0, 1.0244697065, 1.0};
    for (std::size_t k = 0; k < crisp.size(); ++k) {
        CHECK(fdea::crisp_optimistic(crisp, k, 1e-5).first ==
              doctest::Approx(opt[k]).epsilon(1e-6));
        CHECK(fdea::crisp_pessimistic(crisp, k, 1e-5).first ==
              doctest::Approx(pess[k]).epsilon(1e-6));
    }
}

TEST_CASE("bound triples are ordered, capped and floored") {
    std::mt19937_64 gen(1003);
    for (int trial = 0; trial < 30; ++trial) {
        const auto data = oracles::random_dataset(gen, 3 + trial % 5, 1 + trial % 3,
                                                  1 + (trial / 3) % 3, /*crisp=*/false);
        for (std::size_t k = 0; k < data.size(); ++k) {
            const auto o = fdea::optimistic_bounds(data, k, 1e-7);
            CHECK(o.lo <= o.mid + 1e-9);
            CHECK(o.mid <= o.hi + 1e-9);
            CHECK(o.hi <= 1.0 + 1e-7);
            CHECK(o.lo > 0.0);
            const auto p = fdea::pessimistic_bounds(data, k, 1e-7);
            CHECK(p.lo <= p.mid + 1e-9);
            CHECK(p.mid <= p.hi + 1e-9);
            CHECK(p.lo >= 1.0 - 1e-7);
        }
    }
}

TEST_CASE("multiplier sets respect the epsilon floor") {
    const auto data = bundled("guo_tanaka.csv");
    const double eps = 1e-5;
    for (std::size_t k = 0; k < data.size(); ++k) {
        for (const auto& b :
             {fdea::optimistic_bounds(data, k, eps), fdea::pessimistic_bounds(data, k, eps)}) {
            for (const auto* mult : {&b.multipliers_lo, &b.multipliers_mid, &b.multipliers_hi}) {
                for (double u : mult->u) CHECK(u >= eps - 1e-12);
                for (double v : mult->v) CHECK(v >= eps - 1e-12);
            }
        }
    }
}

TEST_CASE("degenerate data collapses to the crisp models in both modes") {
    std::mt19937_64 gen(1004);
    for (int trial = 0; trial < 25; ++trial) {
        const auto data = oracles::random_dataset(gen, 2 + trial % 5, 1 + trial % 2,
                                                  1 + (trial / 2) % 2, /*crisp=*/true);
        for (std::size_t k = 0; k < data.size(); ++k) {
            const double o = fdea::crisp_optimistic(data, k, 1e-6).first;
            const double p = fdea::crisp_pessimistic(data, k, 1e-6).first;
            for (ModelMode mode : {ModelMode::per_bound, ModelMode::literal}) {
                const auto ob = fdea::optimistic_bounds(data, k, 1e-6, mode);
                check_bounds(ob, o, o, o);
                const auto pb = fdea::pessimistic_bounds(data, k, 1e-6, mode);
                check_bounds(pb, p, p, p);
            }
        }
    }
}

TEST_CASE("literal mode is infeasible whenever an input stays strictly fuzzy") {
    std::mt19937_64 gen(1005);
    for (int trial = 0; trial < 20; ++trial) {
        const auto data = oracles::random_dataset(gen, 2 + trial % 4, 1 + trial % 3,
                                                  1 + trial % 2, /*crisp=*/false);
        const std::size_t k = static_cast<std::size_t>(oracles::unit(gen) * data.size());
        CHECK_THROWS_AS(fdea::optimistic_bounds(data, k, 1e-5, ModelMode::literal),
                        ModelInfeasible);
        CHECK_THROWS_AS(fdea::pessimistic_bounds(data, k, 1e-5, ModelMode::literal),
                        ModelInfeasible);
    }
}

TEST_CASE("literal infeasibility report names the conflict") {
    const auto data = bundled("guo_tanaka.csv");
    try {
        fdea::optimistic_bounds(data, 0, 1e-5, ModelMode::literal);
        FAIL("expected ModelInfeasible");
    } catch (const ModelInfeasible& e) {
        CHECK(e.report.dmu_id == "DA");
        CHECK(e.report.mode == ModelMode::literal);
        CHECK(e.report.orientation == Orientation::optimistic);
        REQUIRE(e.report.conflicting_constraints.size() >= 3);
        const std::string msg = e.report.to_message();
        CHECK(msg.find("u.x_lo = 1") != std::string::npos);
        CHECK(msg.find("u.x_hi = 1") != std::string::npos);
        CHECK(msg.find("x1") != std::string::npos);  // the strictly fuzzy input column
        CHECK(msg.find("DA") != std::string::npos);
    }
}

TEST_CASE("literal mode stays feasible when only outputs are fuzzy") {
    // The conflicting equalities involve inputs only; fuzzy outputs are fine.
    DMUDataset d;
    d.input_names = {"x"};
    d.output_names = {"y"};
    for (int j = 0; j < 3; ++j) {
        DMURecord r;
        r.id = "U" + std::to_string(j + 1);
        r.label = r.id;
        r.inputs = {TFN::crisp(2.0 + j)};
        r.outputs = {TFN(1.0 + j, 1.5 + j, 2.0 + j)};
        d.dmus.push_back(std::move(r));
    }
    CHECK_NOTHROW(fdea::optimistic_bounds(d, 0, 1e-6, ModelMode::literal));
    CHECK_NOTHROW(fdea::pessimistic_bounds(d, 1, 1e-6, ModelMode::literal));
}

TEST_CASE("rescaling an input column leaves efficiencies unchanged") {
    std::mt19937_64 gen(1006);
    for (int trial = 0; trial < 10; ++trial) {
        const auto data =
            oracles::random_dataset(gen, 4, 2, 2, /*crisp=*/false);
        DMUDataset scaled = data;
        const std::size_t col = trial % 2;
        const double c = oracles::uniform(gen, 0.25, 4.0);
        for (auto& d : scaled.dmus) {
            const TFN& t = d.inputs[col];
            d.inputs[col] = TFN(t.lo * c, t.mid * c, t.hi * c);
        }
        // Exact invariance only holds with a zero multiplier floor: scaling a
        // column by c rescales its optimal multiplier by 1/c while the floor
        // stays put, perturbing floor-bound solutions by O(epsilon * c * x).
        // A 1e-9 floor keeps that distortion well under the 1e-6 tolerance.
        for (std::size_t k = 0; k < data.size(); ++k) {
            const auto a = fdea::optimistic_bounds(data, k, 1e-9);
            const auto b = fdea::optimistic_bounds(scaled, k, 1e-9);
            check_bounds(b, a.lo, a.mid, a.hi, 1e-6);
            const auto ap = fdea::pessimistic_bounds(data, k, 1e-9);
            const auto bp = fdea::pessimistic_bounds(scaled, k, 1e-9);
            check_bounds(bp, ap.lo, ap.mid, ap.hi, 1e-6);
        }
    }
}

TEST_CASE("oversized epsilon is reported as model infeasibility") {
    const auto data = tiny_crisp({{2, 1}, {3, 2}});
    try {
        fdea::crisp_optimistic(data, 0, 1.0);
        FAIL("expected ModelInfeasible");
    } catch (const ModelInfeasible& e) {
        CHECK(e.report.dmu_id == "A");
        CHECK(e.report.mode == ModelMode::per_bound);
        CHECK(e.report.to_message().find("epsilon") != std::string::npos);
    }
}

TEST_CASE("weighted literal objective collapses on crisp data") {
    std::mt19937_64 gen(1007);
    const auto data = oracles::random_dataset(gen, 4, 2, 2, /*crisp=*/true);
    for (std::size_t k = 0; k < data.size(); ++k) {
        const double o = fdea::crisp_optimistic(data, k, 1e-6).first;
        for (const std::vector<double>& w :
             {std::vector<double>{1, 0, 0}, {0, 0, 1}, {0.2, 0.3, 0.5}}) {
            CHECK(fdea::literal_weighted_value(data, k, 1e-6, Orientation::optimistic, w) ==
                  doctest::Approx(o).epsilon(1e-7));
        }
    }
}

TEST_SUITE_END();
