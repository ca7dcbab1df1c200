#include <doctest.h>

#include <cmath>
#include <sstream>

#include "entmon/errors.hpp"
#include "entmon/io.hpp"
#include "entmon/spectral.hpp"

using namespace entmon;
using entmon::io::json;

TEST_CASE("matrix ingestion: re/im grids") {
    const json j = json::parse(R"({
        "dim": 2,
        "re": [[0.5, 0.1], [0.1, 0.5]],
        "im": [[0.0, 0.2], [-0.2, 0.0]]
    })");
    const HermitianMatrix m = io::matrix_from_json(j);
    CHECK(m.dim() == 2);
    CHECK(m.entries()(0, 1) == Complex(0.1, 0.2));
    CHECK(m.entries()(1, 0) == Complex(0.1, -0.2));

    const DensityState rho = io::density_from_json(j);
    CHECK(rho.positive_definite());
}

TEST_CASE("matrix ingestion: exact-rational spectrum form") {
    const json j = json::parse(R"({"spectrum": ["1/2", "1/4", "1/4"]})");
    const DensityState rho = io::density_from_json(j);
    CHECK(von_neumann_entropy(rho) == doctest::Approx(1.5 * std::log(2.0)).epsilon(1e-14));
}

TEST_CASE("matrix ingestion: validation") {
    CHECK_THROWS_AS(io::matrix_from_json(json::parse(R"({"re": [[1]]})")), validation_error);
    CHECK_THROWS_AS(io::matrix_from_json(json::parse(R"({"dim": 2, "re": [[1, 0]]})")),
                    validation_error);
    // Non-Hermitian imaginary part.
    CHECK_THROWS_AS(io::matrix_from_json(json::parse(
                        R"({"dim": 2, "re": [[1, 0], [0, 0]], "im": [[0, 0.3], [0.3, 0]]})")),
                    validation_error);
}

TEST_CASE("slice ingestion: both forms") {
    const LevelSetSlice through = io::slice_from_json(json::parse(R"({"through": [0.2, 0.3]})"));
    CHECK(through.dim() == 3);
    const LevelSetSlice at = io::slice_from_json(
        json::parse(R"({"d": 3, "c": 1.0296530140645737, "tail": []})"));
    CHECK(at.level() == doctest::Approx(through.level()).epsilon(1e-12));
    CHECK_THROWS_AS(io::slice_from_json(json::parse(R"({"d": 3})")), validation_error);
}

TEST_CASE("trace CSV has the documented columns") {
    Eigen::VectorXd x(2);
    x << 0.2, 0.3;
    const LevelSetSlice slice = LevelSetSlice::through(x);
    const LogLiftState s = initial_lift(slice, 0.2, 0.3);
    std::ostringstream os;
    io::write_trace_csv(os, {s}, slice);
    std::istringstream is(os.str());
    std::string header;
    std::getline(is, header);
    CHECK(header ==
          "step,re_lambda1,im_lambda1,re_lambda2,im_lambda2,re_L1,im_L1,re_L2,im_L2,re_L3,"
          "im_L3,residual");
    std::string row;
    std::getline(is, row);
    CHECK(row.substr(0, 2) == "0,");
}
