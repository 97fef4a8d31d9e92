#pragma once

#include <span>
#include <utility>
#include <vector>

#include "shqmm/density.hpp"
#include "shqmm/matrix.hpp"

namespace shqmm {

// Hidden quantum Markov model: num_ops Kraus operators per observation
// symbol acting on a single density matrix, jointly complete.
struct HqmmModel {
    int dim = 0;
    int num_symbols = 0;
    int num_ops = 0;  // operators per symbol (the auxiliary dimension)

    // Stored op-major: ops[(w-1)*num_symbols + y], matching the stacked layout.
    std::vector<CMatrix> ops;
    DensityMatrix rho0;

    const CMatrix& op(int symbol, int w) const {
        return ops[static_cast<std::size_t>(w - 1) * num_symbols + symbol];
    }
    CMatrix& op(int symbol, int w) {
        return ops[static_cast<std::size_t>(w - 1) * num_symbols + symbol];
    }

    double completeness_residual() const;
    void validate(double tol = 1e-9) const;
};

// One measurement update: probability = Tr(sum_w K rho K^dagger) for the
// observed symbol, posterior = that sum divided by the probability.
// Throws UnderflowError when the probability falls below 1e-300.
std::pair<DensityMatrix, double> hqmm_filter(const HqmmModel& model, const DensityMatrix& rho,
                                             int symbol);

// Per-symbol probabilities from the current state; sums to 1 by completeness.
std::vector<double> hqmm_symbol_distribution(const HqmmModel& model, const DensityMatrix& rho);

// Natural-log likelihood of a sequence starting from rho0.
double hqmm_log_likelihood(const HqmmModel& model, std::span<const int> seq);

}  // namespace shqmm
