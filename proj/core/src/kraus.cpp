#include "shqmm/kraus.hpp"

#include <string>

#include "shqmm/errors.hpp"

namespace shqmm {

double KrausBundle::completeness_residual() const {
    CMatrix sum = CMatrix::Zero(dim, dim);
    for (const auto& k : ops) sum += k.adjoint() * k;
    return (sum - CMatrix::Identity(dim, dim)).norm();
}

void KrausBundle::validate(double tol) const {
    if (dim < 1 || num_symbols < 1 || locality < 0) {
        throw InputError("bundle dimensions must be positive");
    }
    if (static_cast<int>(ops.size()) != num_symbols * num_classes()) {
        throw ShapeError("bundle has " + std::to_string(ops.size()) + " operators, expected " +
                         std::to_string(num_symbols * num_classes()));
    }
    for (const auto& k : ops) {
        if (k.rows() != dim || k.cols() != dim) {
            throw ShapeError("bundle operator is not " + std::to_string(dim) + "x" +
                             std::to_string(dim));
        }
    }
    const double residual = completeness_residual();
    if (residual > tol) {
        throw InputError("bundle completeness residual " + std::to_string(residual) +
                         " exceeds tolerance");
    }
}

double StiefelPoint::orthonormality_residual() const {
    const int m = cols();
    return (mat.adjoint() * mat - CMatrix::Identity(m, m)).norm();
}

void StiefelPoint::validate(double tol) const {
    const double residual = orthonormality_residual();
    if (residual > tol) {
        throw InputError("Stiefel orthonormality residual " + std::to_string(residual) +
                         " exceeds tolerance");
    }
}

StiefelPoint stack_bundle(const KrausBundle& bundle) {
    const int m = bundle.dim;
    const int blocks = bundle.num_symbols * bundle.num_classes();
    CMatrix stacked(static_cast<Eigen::Index>(blocks) * m, m);
    for (int b = 0; b < blocks; ++b) {
        stacked.block(static_cast<Eigen::Index>(b) * m, 0, m, m) = bundle.ops[b];
    }
    return StiefelPoint{std::move(stacked)};
}

std::vector<CMatrix> split_point_flat(const StiefelPoint& point, int num_symbols,
                                      int num_classes, int dim) {
    const Eigen::Index expected =
        static_cast<Eigen::Index>(num_symbols) * num_classes * dim;
    if (point.mat.rows() != expected || point.mat.cols() != dim) {
        throw ShapeError("cannot split " + std::to_string(point.mat.rows()) + "x" +
                         std::to_string(point.mat.cols()) + " point into " +
                         std::to_string(num_symbols) + "*" + std::to_string(num_classes) +
                         " operators of dimension " + std::to_string(dim));
    }
    std::vector<CMatrix> ops;
    ops.reserve(static_cast<std::size_t>(num_symbols) * num_classes);
    for (int b = 0; b < num_symbols * num_classes; ++b) {
        ops.push_back(point.mat.block(static_cast<Eigen::Index>(b) * dim, 0, dim, dim));
    }
    return ops;
}

KrausBundle split_point(const StiefelPoint& point, int num_symbols, int locality, int dim) {
    KrausBundle bundle;
    bundle.dim = dim;
    bundle.num_symbols = num_symbols;
    bundle.locality = locality;
    bundle.ops = split_point_flat(point, num_symbols, 2 * locality + 1, dim);
    return bundle;
}

long parameter_count(int dim, int num_classes) {
    return static_cast<long>(dim) * dim * num_classes;
}

}  // namespace shqmm
