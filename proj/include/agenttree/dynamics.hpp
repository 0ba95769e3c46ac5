#pragma once

#include <array>
#include <cstddef>

namespace agenttree {

/// Local state of one agent. Field order is the order used by every weight
/// dot-product: (W, J, A, Jstar, Jplus, Jminus).
struct AgentState {
    double W = 0.0;       // latest world observation
    double J = 0.0;       // own judgement
    double A = 0.0;       // action
    double Jstar = 0.0;   // parent judgement as collected at last measurement
    double Jplus = 0.0;   // first-child judgement
    double Jminus = 0.0;  // second-child judgement

    static constexpr std::size_t size = 6;

    static AgentState uniform(double c) noexcept { return {c, c, c, c, c, c}; }

    std::array<double, size> as_array() const noexcept { return {W, J, A, Jstar, Jplus, Jminus}; }
    bool is_finite() const noexcept;

    friend bool operator==(const AgentState&, const AgentState&) = default;
};

/// Six weights aligned with AgentState field order.
class WeightVector {
public:
    static constexpr double conservative_tolerance = 1e-12;

    /// Throws std::invalid_argument on non-finite entries.
    explicit WeightVector(const std::array<double, AgentState::size>& w);

    const std::array<double, AgentState::size>& values() const noexcept { return w_; }
    double operator[](std::size_t k) const noexcept { return w_[k]; }

    double sum() const noexcept;
    /// Entries sum to one, so the all-equal state is a fixed point.
    bool conservative() const noexcept;

    WeightVector scaled(double factor) const;

    /// Weighted sum of the state fields.
    ///
    /// Evaluated relative to an anchor field (the one with the largest weight
    /// magnitude): anchor * sum + sum_k w_k (x_k - anchor), with sum taken as
    /// exactly 1 for conservative vectors. This equals the plain dot product
    /// algebraically but maps an all-equal state to itself bit-exactly, and a
    /// zero weight contributes exactly nothing. Terms are accumulated in field
    /// order.
    double apply(const AgentState& s) const noexcept;

    friend bool operator==(const WeightVector&, const WeightVector&) = default;

private:
    std::array<double, AgentState::size> w_;
    std::size_t anchor_ = 0;
};

/// Judgement weights (1 - 3 theta, 0, 0, theta, theta, theta).
WeightVector judgement_weights(double theta);
/// Action weights (0, phi, 0, 1 - phi, 0, 0).
WeightVector action_weights(double phi);

// T1: observe the world and collect neighbour judgements. J and A are untouched.
AgentState step_measure(const AgentState& state, double world_value, double noise,
                        double parent_J, double childA_J, double childB_J);
// T2: J <- state . sigma
AgentState step_judge(const AgentState& state, const WeightVector& sigma);
// T3: A <- state . alpha
AgentState step_act(const AgentState& state, const WeightVector& alpha);

}  // namespace agenttree
