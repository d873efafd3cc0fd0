#pragma once

#include <cstdint>

namespace sdo {

inline constexpr int kLevelMax = 15;  // 4-bit weight resolution

enum class Polarity : std::uint8_t { Excitatory, Inhibitory };

// Direction of a weight update in signed-current terms: Up always means
// "raise the effective synaptic current", whatever the polarity.
enum class Direction : std::uint8_t { Up, Down, None };

// 4-bit saturating weight with a fixed polarity.
struct QuantWeight {
    std::uint8_t level = 0;  // [0, 15]
    Polarity polarity = Polarity::Excitatory;
    double unit_current = 1.0;  // current per level, > 0

    double effective_current() const {
        const double mag = static_cast<double>(level) * unit_current;
        return polarity == Polarity::Excitatory ? mag : -mag;
    }
};

// 6-bit maximal-length Fibonacci LFSR, taps at bits 6 and 5 (polynomial
// x^6 + x^5 + 1); cycles through all 63 nonzero states. State 0 is the
// lockup state and is rejected.
struct Lfsr6 {
    std::uint8_t state = 1;  // [1, 63]
};

// Advances the register one step and returns the new state as the draw.
std::uint8_t lfsr_next(Lfsr6& r);

// Ideal linear 6-bit current DAC: draw * i_lsb.
double dac(std::uint8_t draw, double i_lsb);

// err = alpha * (i_teach - i_sensory) * |i_teach|, sampled at pre-synaptic
// spike arrival. A zero teacher current forces err = 0, which gates all
// learning. Caller guarantees alpha > 0.
double compute_error(double i_teach, double i_sensory, double alpha);

// Update direction from the signed error. Errors within [-tie_band,
// tie_band] leave both WTA outputs low: no direction, no update.
Direction wta_direction(double err, double tie_band);

// Comparator decision: the update fires iff the error magnitude strictly
// exceeds the random current.
bool stochastic_round(double err_magnitude, double i_random);

// Single saturating +-1 level step. Up raises the signed effective
// current, so it increments excitatory levels and decrements inhibitory
// ones. Caller guarantees dir != None.
QuantWeight apply_update(QuantWeight w, Direction dir);

struct LearningParams {
    double alpha = 1.0;
    double i_lsb = 1.0 / 63.0;  // DAC current per code, > 0
    double tie_band = 0.0;      // >= 0
};

// Per-row learning block: one LFSR shared by all synapses of the row, one
// decision per pre-synaptic event.
struct RowLearner {
    Lfsr6 lfsr;
    std::uint64_t decisions = 0;  // pre-synaptic events seen
    std::uint64_t accepted = 0;   // update signals that fired
    double err_abs_sum = 0.0;     // |i_teach - i_sensory| summed at events

    // Handles one pre-synaptic event: always consumes exactly one LFSR
    // draw (the random stream is a pure function of the event count), then
    // applies at most one paired +-1 update to the event's synapse. Both
    // polarities of the pair follow the single row-level decision, each
    // saturating at [0, 15] independently.
    // Returns the decision delta: +1 (Up fired), -1 (Down fired) or 0.
    int on_pre_spike(double i_teach, double i_sensory, const LearningParams& p,
                     std::uint8_t& exc_level, std::uint8_t& inh_level);
};

}  // namespace sdo
