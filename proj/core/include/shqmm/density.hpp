#pragma once

#include <vector>

#include "shqmm/matrix.hpp"

namespace shqmm {

inline constexpr double kDensityTolerance = 1e-10;

// Outcome of checking one matrix against the density-matrix conditions
// (Hermitian, positive semi-definite, unit trace).
struct DensityReport {
    double hermiticity_residual = 0.0;
    double min_eigenvalue = 0.0;
    complexd trace{0.0, 0.0};
    bool hermitian = false;
    bool positive_semidefinite = false;
    bool unit_trace = false;

    bool pass() const { return hermitian && positive_semidefinite && unit_trace; }
};

// Reports residuals; passes iff all are within tol. Throws ShapeError on
// non-square input.
DensityReport validate_density(const CMatrix& mat, double tol = kDensityTolerance);

// Hermitian, PSD, unit-trace matrix.
struct DensityMatrix {
    CMatrix mat;

    int dim() const { return static_cast<int>(mat.rows()); }

    // Checked constructor; use when the matrix comes from outside.
    static DensityMatrix checked(CMatrix mat, double tol = kDensityTolerance);
};

DensityMatrix maximally_mixed(int dim);

// The split model's hidden state: a list of conditional density matrices
// whose traces sum to one. Individual members are Hermitian PSD with
// trace equal to the probability of their environment subspace.
struct ConditionalEnsemble {
    std::vector<CMatrix> members;

    int size() const { return static_cast<int>(members.size()); }
    int dim() const { return members.empty() ? 0 : static_cast<int>(members[0].rows()); }

    // Sum of member traces (real part).
    double total_trace() const;

    // Sum of members.
    CMatrix aggregate() const;

    // Throws InputError if a member fails Hermitian/PSD checks or the
    // total trace is off one.
    void validate(double tol = kDensityTolerance) const;
};

}  // namespace shqmm
