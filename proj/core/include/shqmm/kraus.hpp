#pragma once

#include <vector>

#include "shqmm/matrix.hpp"

namespace shqmm {

inline constexpr double kStiefelTolerance = 1e-9;

// Grid of Kraus operators for the split model: num_classes = 2*locality+1
// operator classes per observation symbol, all dim x dim, jointly
// satisfying sum_{y,c} K^dagger K = I. Class c (1-based) carries the
// ensemble-index shift c - 1 - locality, so class 1 reaches the furthest
// higher-index neighbour and the middle class acts in place.
struct KrausBundle {
    int dim = 0;          // operator dimension
    int num_symbols = 0;  // observation alphabet size
    int locality = 0;     // neighbourhood radius k; class count is 2k+1

    // Stored class-major: ops[(c-1)*num_symbols + y].
    std::vector<CMatrix> ops;

    int num_classes() const { return 2 * locality + 1; }

    const CMatrix& op(int symbol, int klass) const {
        return ops[static_cast<std::size_t>(klass - 1) * num_symbols + symbol];
    }
    CMatrix& op(int symbol, int klass) {
        return ops[static_cast<std::size_t>(klass - 1) * num_symbols + symbol];
    }

    // Ensemble-index shift applied by class c in the evolution.
    int shift(int klass) const { return klass - 1 - locality; }

    // Frobenius norm of sum K^dagger K - I.
    double completeness_residual() const;

    // Throws on inconsistent dimensions or completeness violation.
    void validate(double tol = kStiefelTolerance) const;
};

// Tall matrix with orthonormal columns: the stacked Kraus parameters and
// the optimizer's variable. block_rows() = num_symbols*num_classes*dim.
struct StiefelPoint {
    CMatrix mat;

    int block_rows() const { return static_cast<int>(mat.rows()); }
    int cols() const { return static_cast<int>(mat.cols()); }

    // Frobenius norm of mat^dagger mat - I.
    double orthonormality_residual() const;

    void validate(double tol = kStiefelTolerance) const;
};

// Stacks the operator grid class-major then symbol-major: the block at
// row range [b*m, (b+1)*m) is ops[y][c] with b = (c-1)*num_symbols + y.
StiefelPoint stack_bundle(const KrausBundle& bundle);

// Inverse of stack_bundle. Throws ShapeError when the row count does not
// factor as num_symbols*num_classes*dim (num_classes = 2*locality+1).
KrausBundle split_point(const StiefelPoint& point, int num_symbols, int locality, int dim);

// Same splitting for a flat class structure (no shift semantics): used by
// models whose operators all act in place. Returns the operators in
// class-major order.
std::vector<CMatrix> split_point_flat(const StiefelPoint& point, int num_symbols,
                                      int num_classes, int dim);

// Trainable parameter count m^2 * j for operator dimension m and j
// operator classes per symbol.
long parameter_count(int dim, int num_classes);

}  // namespace shqmm
