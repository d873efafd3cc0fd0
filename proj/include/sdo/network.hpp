#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "sdo/dynamics.hpp"
#include "sdo/plasticity.hpp"

namespace sdo {

struct NetworkConfig {
    std::uint32_t n_inputs = 784;
    std::uint32_t n_outputs = 10;
    double tau_soma = 0.010;
    double tau_sensory = 0.010;
    double tau_teach = 0.010;
    double threshold = 1.0;
    double reset_value = 0.0;
    double refractory = 0.002;
    double alpha = 2e-5;
    // DAC current per code. <= 0 means "derive at run setup": full scale =
    // (nominal teacher drive)^2 spread over the 63 codes, so a 100% relative
    // error maps to the DAC full scale. See derived_i_lsb() in run.hpp.
    double i_lsb = 0.0;
    // Current per weight level. With the defaults, one fully potentiated
    // synapse (level 15) driven at 100 Hz Poisson settles the sensory branch
    // at 100 * tau_sensory * 15 * unit_current = 1.5 = 1.5x threshold.
    double unit_current = 0.1;
    double tie_band = 0.0;
    double teach_weight = 1.6;  // non-plastic teacher injection magnitude
    double dt = 1e-4;
    std::uint64_t master_seed = 1;
};

// Teacher kinds order before sensory so the teacher context at a timestamp
// is visible to learning triggered by sensory events at the same instant.
enum class SpikeKind : std::uint8_t {
    TeachPositive = 0,
    TeachNegative = 1,
    Sensory = 2,
};

// Streaming input token. Sensory events carry the input channel and fan out
// to every output row; teach events carry the target row.
struct SpikeEvent {
    double time = 0.0;
    std::uint32_t channel = 0;  // input index (sensory kind)
    std::uint32_t target = 0;   // output row (teach kinds)
    SpikeKind kind = SpikeKind::Sensory;
};

// The one total order used wherever a stream must be sorted:
// (time, kind, channel, target), with teach kinds before sensory.
bool event_less(const SpikeEvent& a, const SpikeEvent& b);

// All plastic weight levels of the network. Every (input, output) pair has
// one excitatory and one inhibitory 4-bit weight; the effective signed
// weight is (exc - inh) * unit_current in [-15, +15] levels.
struct SynapseMatrix {
    std::uint32_t n_inputs = 0;
    std::uint32_t n_outputs = 0;
    double unit_current = 1.0;
    std::vector<std::uint8_t> exc;  // row-major: [input * n_outputs + output]
    std::vector<std::uint8_t> inh;

    std::size_t index(std::uint32_t input, std::uint32_t output) const {
        return static_cast<std::size_t>(input) * n_outputs + output;
    }
    double effective_weight(std::uint32_t input, std::uint32_t output) const {
        const std::size_t k = index(input, output);
        return (static_cast<double>(exc[k]) - static_cast<double>(inh[k])) *
               unit_current;
    }
};

struct TraceSample {
    double t = 0.0;
    double sensory = 0.0;
    double teach = 0.0;
    double soma = 0.0;
    std::uint8_t exc_level = 0;
    std::uint8_t inh_level = 0;
};

// Downsampled probe of one row's traces and one synapse pair's levels.
struct TraceProbe {
    std::uint32_t row = 0;
    std::uint32_t input = 0;
    double interval = 1e-3;
};

struct WindowResult {
    std::vector<std::uint32_t> spike_counts;  // per output row, this window
    std::uint64_t updates = 0;                // accepted updates, this window
    std::uint64_t decisions = 0;              // learning decisions, this window
    double err_abs_sum = 0.0;  // |teach - sensory| summed at decisions
    std::vector<TraceSample> trace;

    double mean_abs_err() const {
        return decisions ? err_abs_sum / static_cast<double>(decisions) : 0.0;
    }
};

// Single-layer N-input x M-output network with paired plastic synapses and
// one learning block per row. Deterministic: all initial weight levels and
// per-row LFSR seeds come from a counter-based expansion of master_seed.
class Network {
  public:
    explicit Network(const NetworkConfig& cfg);

    // Applies one sensory spike on input channel `input` at absolute time t:
    // decays all branch traces to t, injects the signed effective weight
    // into every row's sensory branch, then runs one learning decision per
    // row on the (input, row) pair.
    void on_sensory_spike(std::uint32_t input, double t);

    // Applies one teacher spike (sign +-1) to row `row` at absolute time t.
    // Teacher events never trigger learning.
    void on_teach_spike(std::uint32_t row, int sign, double t);

    // Consumes a window-relative, time-sorted event stream (times in
    // [0, duration)) while advancing the clock in whole dt steps: within
    // each step all events stamped inside it are applied in order, then the
    // somas advance and spikes are collected. Duration is rounded to the
    // nearest whole number of steps.
    WindowResult run_window(std::span<const SpikeEvent> events, double duration,
                            const std::optional<TraceProbe>& probe = {});

    void set_learning_enabled(bool on) { learning_enabled_ = on; }
    bool learning_enabled() const { return learning_enabled_; }

    const NetworkConfig& config() const { return cfg_; }
    const SynapseMatrix& weights() const { return weights_; }
    // Replaces all weight levels (checkpoint restore). Shape must match.
    void set_weights(const SynapseMatrix& w);

    double now() const { return clock_.now; }

    NeuronState& row(std::uint32_t j) { return rows_.at(j); }
    const NeuronState& row(std::uint32_t j) const { return rows_.at(j); }
    const RowLearner& learner(std::uint32_t j) const { return learners_.at(j); }

    std::uint64_t total_updates() const;
    std::uint64_t total_decisions() const;

  private:
    // Decays every row's branch traces from t_branches_ to t with factors
    // computed once (taus are shared across rows).
    void decay_branches_to(double t);
    void apply_event(const SpikeEvent& e, double t_abs);

    NetworkConfig cfg_;
    LearningParams learn_;
    std::vector<NeuronState> rows_;
    std::vector<RowLearner> learners_;
    SynapseMatrix weights_;
    SimClock clock_;
    double t_branches_ = 0.0;
    bool learning_enabled_ = true;
};

// Argmax readout over per-row spike counts; ties break to the lowest index.
std::uint32_t classify(std::span<const std::uint32_t> spike_counts);

}  // namespace sdo
