#include "shqmm/hqmm.hpp"

#include <cmath>
#include <string>

#include "shqmm/errors.hpp"

namespace shqmm {

double HqmmModel::completeness_residual() const {
    CMatrix sum = CMatrix::Zero(dim, dim);
    for (const auto& k : ops) sum += k.adjoint() * k;
    return (sum - CMatrix::Identity(dim, dim)).norm();
}

void HqmmModel::validate(double tol) const {
    if (dim < 1 || num_symbols < 1 || num_ops < 1) {
        throw InputError("HQMM sizes must be positive");
    }
    if (static_cast<int>(ops.size()) != num_symbols * num_ops) {
        throw ShapeError("HQMM has wrong operator count");
    }
    for (const auto& k : ops) {
        if (k.rows() != dim || k.cols() != dim) throw ShapeError("HQMM operator shape mismatch");
    }
    const double residual = completeness_residual();
    if (residual > tol) {
        throw InputError("HQMM completeness residual " + std::to_string(residual) +
                         " exceeds tolerance");
    }
    if (rho0.dim() != dim) throw ShapeError("rho0 dimension mismatch");
}

namespace {

CMatrix measurement_sum(const HqmmModel& model, const CMatrix& rho, int symbol) {
    CMatrix sum = CMatrix::Zero(model.dim, model.dim);
    CMatrix tmp(model.dim, model.dim);
    for (int w = 1; w <= model.num_ops; ++w) {
        const CMatrix& k = model.op(symbol, w);
        tmp.noalias() = k * rho;
        sum.noalias() += tmp * k.adjoint();
    }
    return sum;
}

void check_symbol(const HqmmModel& model, int symbol) {
    if (symbol < 0 || symbol >= model.num_symbols) {
        throw InputError("symbol " + std::to_string(symbol) + " out of range [0, " +
                         std::to_string(model.num_symbols) + ")");
    }
}

}  // namespace

std::pair<DensityMatrix, double> hqmm_filter(const HqmmModel& model, const DensityMatrix& rho,
                                             int symbol) {
    check_symbol(model, symbol);
    CMatrix sum = measurement_sum(model, rho.mat, symbol);
    const double prob = sum.trace().real();
    if (prob < 1e-300) {
        throw UnderflowError("symbol " + std::to_string(symbol) +
                             " has vanishing probability under the HQMM");
    }
    sum /= prob;
    return {DensityMatrix{std::move(sum)}, prob};
}

std::vector<double> hqmm_symbol_distribution(const HqmmModel& model, const DensityMatrix& rho) {
    std::vector<double> probs(model.num_symbols);
    for (int y = 0; y < model.num_symbols; ++y) {
        probs[y] = measurement_sum(model, rho.mat, y).trace().real();
    }
    return probs;
}

double hqmm_log_likelihood(const HqmmModel& model, std::span<const int> seq) {
    DensityMatrix rho = model.rho0;
    double loglik = 0.0;
    for (int y : seq) {
        auto [posterior, prob] = hqmm_filter(model, rho, y);
        rho = std::move(posterior);
        loglik += std::log(prob);
    }
    return loglik;
}

}  // namespace shqmm
