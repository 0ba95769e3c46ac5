#include "agenttree/dynamics.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace agenttree {

namespace {

void require_finite(double v, const char* what) {
    if (!std::isfinite(v)) {
        throw std::invalid_argument(std::string(what) + " must be finite");
    }
}

void require_finite(const AgentState& s) {
    if (!s.is_finite()) throw std::invalid_argument("agent state must be finite");
}

}  // namespace

bool AgentState::is_finite() const noexcept {
    for (double v : as_array()) {
        if (!std::isfinite(v)) return false;
    }
    return true;
}

WeightVector::WeightVector(const std::array<double, AgentState::size>& w) : w_(w) {
    for (std::size_t k = 0; k < w_.size(); ++k) {
        require_finite(w_[k], "weight");
        if (std::fabs(w_[k]) > std::fabs(w_[anchor_])) anchor_ = k;
    }
}

double WeightVector::sum() const noexcept {
    double total = 0.0;
    for (double v : w_) total += v;
    return total;
}

bool WeightVector::conservative() const noexcept {
    return std::fabs(sum() - 1.0) <= conservative_tolerance;
}

WeightVector WeightVector::scaled(double factor) const {
    require_finite(factor, "weight scale");
    auto w = w_;
    for (double& v : w) v *= factor;
    return WeightVector(w);
}

double WeightVector::apply(const AgentState& s) const noexcept {
    const auto x = s.as_array();
    const double anchor = x[anchor_];
    double acc = conservative() ? anchor : anchor * sum();
    for (std::size_t k = 0; k < x.size(); ++k) {
        if (w_[k] != 0.0) acc += w_[k] * (x[k] - anchor);
    }
    return acc;
}

WeightVector judgement_weights(double theta) {
    require_finite(theta, "theta");
    return WeightVector({1.0 - 3.0 * theta, 0.0, 0.0, theta, theta, theta});
}

WeightVector action_weights(double phi) {
    require_finite(phi, "phi");
    return WeightVector({0.0, phi, 0.0, 1.0 - phi, 0.0, 0.0});
}

AgentState step_measure(const AgentState& state, double world_value, double noise,
                        double parent_J, double childA_J, double childB_J) {
    require_finite(state);
    require_finite(world_value, "world value");
    require_finite(noise, "noise");
    require_finite(parent_J, "parent judgement");
    require_finite(childA_J, "child judgement");
    require_finite(childB_J, "child judgement");
    AgentState next = state;
    next.W = world_value + noise;
    next.Jstar = parent_J;
    next.Jplus = childA_J;
    next.Jminus = childB_J;
    return next;
}

AgentState step_judge(const AgentState& state, const WeightVector& sigma) {
    require_finite(state);
    AgentState next = state;
    next.J = sigma.apply(state);
    return next;
}

AgentState step_act(const AgentState& state, const WeightVector& alpha) {
    require_finite(state);
    AgentState next = state;
    next.A = alpha.apply(state);
    return next;
}

}  // namespace agenttree
