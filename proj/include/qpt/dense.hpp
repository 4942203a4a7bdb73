#pragma once

#include <Eigen/Dense>

namespace qpt {

// 2^n x 2^n matrix, qubit 0 mapped to the most significant bit of the basis
// index (row-major Kronecker order).
struct DenseOperator {
    Eigen::MatrixXcd mat;
    int n_qubits = 0;
};

struct StateVector {
    Eigen::VectorXcd amps;
    int n_qubits = 0;
};

} // namespace qpt
