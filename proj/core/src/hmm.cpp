#include "shqmm/hmm.hpp"

#include <cmath>
#include <string>

#include "shqmm/errors.hpp"

namespace shqmm {

namespace {

void check_column_stochastic(const RMatrix& m, const char* name, double tol) {
    if ((m.array() < 0.0).any()) {
        throw InputError(std::string(name) + " has negative entries");
    }
    for (Eigen::Index c = 0; c < m.cols(); ++c) {
        if (std::abs(m.col(c).sum() - 1.0) > tol) {
            throw InputError(std::string(name) + " column " + std::to_string(c) +
                             " sums to " + std::to_string(m.col(c).sum()));
        }
    }
}

}  // namespace

void HmmModel::validate(double tol) const {
    if (num_states < 1 || num_symbols < 1) throw InputError("HMM sizes must be positive");
    if (transition.rows() != num_states || transition.cols() != num_states) {
        throw ShapeError("transition matrix must be num_states x num_states");
    }
    if (emission.rows() != num_symbols || emission.cols() != num_states) {
        throw ShapeError("emission matrix must be num_symbols x num_states");
    }
    if (initial.size() != num_states) throw ShapeError("initial vector has wrong length");
    check_column_stochastic(transition, "transition", tol);
    check_column_stochastic(emission, "emission", tol);
    if ((initial.array() < 0.0).any() || std::abs(initial.sum() - 1.0) > tol) {
        throw InputError("initial state vector is not on the simplex");
    }
}

double hmm_log_likelihood(const HmmModel& model, std::span<const int> seq) {
    RVector x = model.initial;
    double loglik = 0.0;
    for (int y : seq) {
        if (y < 0 || y >= model.num_symbols) {
            throw InputError("symbol " + std::to_string(y) + " out of range [0, " +
                             std::to_string(model.num_symbols) + ")");
        }
        x = model.transition * x;
        x = model.emission.row(y).transpose().cwiseProduct(x);
        const double scale = x.sum();
        if (scale < 1e-300) throw UnderflowError("impossible symbol in HMM forward pass");
        x /= scale;
        loglik += std::log(scale);
    }
    return loglik;
}

}  // namespace shqmm
