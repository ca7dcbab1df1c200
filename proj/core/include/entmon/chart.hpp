#ifndef ENTMON_CHART_HPP
#define ENTMON_CHART_HPP

#include <vector>

#include "entmon/hermitian.hpp"

namespace entmon {

/// Basis matrices of the real coordinatization of Hermitian d x d
/// matrices, in the fixed order: strict-lower-triangle real parts
/// (row-major), strict-lower-triangle imaginary parts (row-major),
/// then the diagonal. d^2 matrices total; B_re = E_ij + E_ji and
/// B_im = i E_ij - i E_ji are orthogonal but carry norm sqrt(2).
std::vector<Eigen::MatrixXcd> coordinate_basis(int d);

/// Result of the diagonalizing-chart construction: the eigenvalue map
/// extended by coordinate functions into a local diffeomorphism.
struct ChartReport {
    // Coordinate indices whose identity rows the selection map retains
    // (d^2 - d of them; the other d rows were deleted greedily).
    std::vector<int> selected_rows;
    double jacobian_condition = 0.0;
    bool full_rank = false;
    // Numerical rank of the d x d^2 eigenvalue-derivative block.
    int eigenvalue_block_rank = 0;
};

/// Builds the Jacobian of the extended eigenvalue map at rho: the top
/// block C has entries <phi_i| B_m |phi_i> over the coordinate basis,
/// the bottom block is the identity. Deletes d identity rows by greedy
/// condition-number minimization and reports the conditioning of the
/// remaining square matrix. Requires a non-degenerate spectrum.
ChartReport build_chart(const DensityState& rho);

} // namespace entmon

#endif
