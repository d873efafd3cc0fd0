#pragma once

#include <cstdint>

namespace sdo {

// First-order low-pass state variable: tau * dv/dt = -v between inputs,
// with input events adding to the value instantaneously. Houses every
// current trace in the model (soma and both dendritic branches).
struct ExpTrace {
    double value = 0.0;
    double tau = 0.010;  // seconds, > 0
};

// Exact homogeneous solution over delta_t seconds: value * exp(-dt/tau).
// Rejects negative delta_t.
ExpTrace decay(ExpTrace trace, double delta_t);

// Instantaneous jump at an input event; amount is negative for inhibitory
// input.
ExpTrace inject(ExpTrace trace, double amount);

// One output neuron: somatic compartment plus the two dendritic branch
// traces. Branch values are signed (excitatory injections positive,
// inhibitory negative).
struct NeuronState {
    ExpTrace soma;
    ExpTrace sensory;
    ExpTrace teach;
    double threshold = 1.0;  // soma spike level, > 0
    double reset_value = 0.0;
    double refractory_period = 0.002;  // seconds, >= 0
    double refractory_until = 0.0;     // absolute simulation time
    std::uint64_t spike_count = 0;
};

// Exponential-Euler soma step with the branch drive held constant over
// [t, t+dt]:
//   soma <- I_in + (soma - I_in) * exp(-dt/tau_soma),
//   I_in = sensory.value + teach.value.
// Exact when the drive is piecewise constant per step.
void step_soma(NeuronState& n, double dt);

// Same update with exp(-dt/tau_soma) precomputed by the caller (hot loop
// with a fixed dt).
void step_soma_prefactored(NeuronState& n, double drive, double decay_factor);

// Threshold/reset with an absolute refractory gate. Returns true when a
// spike is emitted at t_now; the soma is then set to reset_value and the
// neuron is refractory until t_now + refractory_period.
bool check_spike(NeuronState& n, double t_now);

// Fixed simulation clock.
struct SimClock {
    double dt = 1e-4;  // seconds, > 0
    double now = 0.0;  // non-decreasing
};

}  // namespace sdo
