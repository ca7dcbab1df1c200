#include "entmon/chart.hpp"

#include <Eigen/SVD>
#include <algorithm>
#include <limits>

#include "entmon/errors.hpp"

namespace entmon {

std::vector<Eigen::MatrixXcd> coordinate_basis(int d) {
    std::vector<Eigen::MatrixXcd> basis;
    basis.reserve(static_cast<std::size_t>(d) * d);
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < i; ++j) {
            Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(d, d);
            m(i, j) = 1.0;
            m(j, i) = 1.0;
            basis.push_back(m);
        }
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < i; ++j) {
            Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(d, d);
            m(i, j) = Complex(0.0, 1.0);
            m(j, i) = Complex(0.0, -1.0);
            basis.push_back(m);
        }
    for (int i = 0; i < d; ++i) {
        Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(d, d);
        m(i, i) = 1.0;
        basis.push_back(m);
    }
    return basis;
}

namespace {

double condition_number(const Eigen::MatrixXd& m) {
    const Eigen::VectorXd sv = m.jacobiSvd().singularValues();
    const double smin = sv(sv.size() - 1);
    if (smin <= 0.0) return std::numeric_limits<double>::infinity();
    return sv(0) / smin;
}

} // namespace

ChartReport build_chart(const DensityState& rho) {
    rho.require_nondegenerate("build_chart");
    const int d = rho.dim();
    const int n = d * d;
    const Spectrum& s = rho.spectrum();
    const auto basis = coordinate_basis(d);

    // Eigenvalue-derivative block: C(i, m) = <phi_i| B_m |phi_i>.
    Eigen::MatrixXd c(d, n);
    for (int m = 0; m < n; ++m)
        for (int i = 0; i < d; ++i)
            c(i, m) = (s.eigenvectors.col(i).adjoint() * basis[m] * s.eigenvectors.col(i))(0).real();

    const Eigen::VectorXd csv = c.jacobiSvd().singularValues();
    int c_rank = 0;
    for (Eigen::Index i = 0; i < csv.size(); ++i)
        if (csv(i) > 1e-8 * csv(0)) ++c_rank;

    // Greedily delete d identity rows, each time the one whose removal
    // leaves the best-conditioned stack [C; I_rows].
    std::vector<int> alive(n);
    for (int i = 0; i < n; ++i) alive[i] = i;

    auto stacked = [&](const std::vector<int>& rows) {
        Eigen::MatrixXd m(d + static_cast<int>(rows.size()), n);
        m.topRows(d) = c;
        for (std::size_t r = 0; r < rows.size(); ++r) {
            m.row(d + static_cast<Eigen::Index>(r)).setZero();
            m(d + static_cast<Eigen::Index>(r), rows[r]) = 1.0;
        }
        return m;
    };

    for (int pass = 0; pass < d; ++pass) {
        double best_cond = std::numeric_limits<double>::infinity();
        int best_idx = -1;
        for (std::size_t cand = 0; cand < alive.size(); ++cand) {
            std::vector<int> rows;
            rows.reserve(alive.size() - 1);
            for (std::size_t r = 0; r < alive.size(); ++r)
                if (r != cand) rows.push_back(alive[r]);
            const double cond = condition_number(stacked(rows));
            if (cond < best_cond) {
                best_cond = cond;
                best_idx = static_cast<int>(cand);
            }
        }
        alive.erase(alive.begin() + best_idx);
    }

    ChartReport report;
    report.selected_rows = alive;
    report.jacobian_condition = condition_number(stacked(alive));
    report.full_rank = report.jacobian_condition < 1e8;
    report.eigenvalue_block_rank = c_rank;
    return report;
}

} // namespace entmon
