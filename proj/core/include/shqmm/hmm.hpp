#pragma once

#include <span>

#include "shqmm/matrix.hpp"

namespace shqmm {

// State-emitting (Moore) hidden Markov model with column-stochastic
// transition and emission: next state drawn from transition.col(state),
// symbol drawn from emission.col(next state).
struct HmmModel {
    int num_states = 0;
    int num_symbols = 0;
    RMatrix transition;  // num_states x num_states
    RMatrix emission;    // num_symbols x num_states
    RVector initial;     // num_states

    void validate(double tol = 1e-12) const;
};

// Natural-log likelihood of the symbol sequence under the model, via the
// scaled forward recursion x <- diag(emission row) * transition * x.
double hmm_log_likelihood(const HmmModel& model, std::span<const int> seq);

}  // namespace shqmm
