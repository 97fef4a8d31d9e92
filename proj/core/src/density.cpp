#include "shqmm/density.hpp"

#include <Eigen/Eigenvalues>

#include "shqmm/errors.hpp"

namespace shqmm {

double spectral_norm(const CMatrix& a) {
    Eigen::JacobiSVD<CMatrix> svd(a);
    return svd.singularValues().size() == 0 ? 0.0 : svd.singularValues()(0);
}

DensityReport validate_density(const CMatrix& mat, double tol) {
    if (mat.rows() != mat.cols()) {
        throw ShapeError("validate_density: matrix must be square, got " +
                         std::to_string(mat.rows()) + "x" + std::to_string(mat.cols()));
    }
    DensityReport report;
    report.hermiticity_residual = hermiticity_residual(mat);
    report.trace = mat.trace();

    // Eigenvalues of the Hermitian part; for a valid density matrix this
    // is the matrix itself up to the reported residual.
    CMatrix sym = (mat + mat.adjoint()) / 2.0;
    Eigen::SelfAdjointEigenSolver<CMatrix> es(sym, Eigen::EigenvaluesOnly);
    report.min_eigenvalue = es.eigenvalues().minCoeff();

    report.hermitian = report.hermiticity_residual <= tol;
    report.positive_semidefinite = report.min_eigenvalue >= -tol;
    report.unit_trace =
        std::abs(report.trace.real() - 1.0) <= tol && std::abs(report.trace.imag()) <= tol;
    return report;
}

DensityMatrix DensityMatrix::checked(CMatrix mat, double tol) {
    DensityReport report = validate_density(mat, tol);
    if (!report.pass()) {
        throw InputError("not a density matrix: hermiticity residual " +
                         std::to_string(report.hermiticity_residual) + ", min eigenvalue " +
                         std::to_string(report.min_eigenvalue) + ", trace " +
                         std::to_string(report.trace.real()));
    }
    return DensityMatrix{std::move(mat)};
}

DensityMatrix maximally_mixed(int dim) {
    return DensityMatrix{CMatrix::Identity(dim, dim) / static_cast<double>(dim)};
}

double ConditionalEnsemble::total_trace() const {
    double total = 0.0;
    for (const auto& member : members) total += member.trace().real();
    return total;
}

CMatrix ConditionalEnsemble::aggregate() const {
    CMatrix sum = CMatrix::Zero(dim(), dim());
    for (const auto& member : members) sum += member;
    return sum;
}

void ConditionalEnsemble::validate(double tol) const {
    if (members.empty()) throw InputError("ensemble has no members");
    for (int i = 0; i < size(); ++i) {
        const CMatrix& member = members[i];
        if (member.rows() != dim() || member.cols() != dim()) {
            throw ShapeError("ensemble member " + std::to_string(i) + " has inconsistent shape");
        }
        if (hermiticity_residual(member) > tol) {
            throw InputError("ensemble member " + std::to_string(i) + " is not Hermitian");
        }
        CMatrix sym = (member + member.adjoint()) / 2.0;
        Eigen::SelfAdjointEigenSolver<CMatrix> es(sym, Eigen::EigenvaluesOnly);
        if (es.eigenvalues().minCoeff() < -tol) {
            throw InputError("ensemble member " + std::to_string(i) +
                             " is not positive semi-definite");
        }
    }
    if (std::abs(total_trace() - 1.0) > tol) {
        throw InputError("ensemble total trace " + std::to_string(total_trace()) + " is not 1");
    }
}

}  // namespace shqmm
