#include "sdo/plasticity.hpp"

#include <cmath>
#include <stdexcept>

namespace sdo {

std::uint8_t lfsr_next(Lfsr6& r) {
    if (r.state == 0 || r.state > 63) {
        throw std::invalid_argument("Lfsr6: state out of [1, 63]");
    }
    const unsigned s = r.state;
    const unsigned feedback = ((s >> 5) ^ (s >> 4)) & 1u;
    r.state = static_cast<std::uint8_t>(((s << 1) | feedback) & 0x3Fu);
    return r.state;
}

double dac(std::uint8_t draw, double i_lsb) {
    return static_cast<double>(draw) * i_lsb;
}

double compute_error(double i_teach, double i_sensory, double alpha) {
    return alpha * (i_teach - i_sensory) * std::abs(i_teach);
}

Direction wta_direction(double err, double tie_band) {
    if (err > tie_band) return Direction::Up;
    if (err < -tie_band) return Direction::Down;
    return Direction::None;
}

bool stochastic_round(double err_magnitude, double i_random) {
    return err_magnitude > i_random;
}

QuantWeight apply_update(QuantWeight w, Direction dir) {
    if (dir == Direction::None) {
        throw std::invalid_argument("apply_update: direction required");
    }
    const bool raise =
        (dir == Direction::Up) == (w.polarity == Polarity::Excitatory);
    if (raise) {
        if (w.level < kLevelMax) ++w.level;
    } else {
        if (w.level > 0) --w.level;
    }
    return w;
}

int RowLearner::on_pre_spike(double i_teach, double i_sensory,
                             const LearningParams& p, std::uint8_t& exc_level,
                             std::uint8_t& inh_level) {
    ++decisions;
    err_abs_sum += std::abs(i_teach - i_sensory);
    // One draw per event even when the decision is gated or rejected.
    const std::uint8_t draw = lfsr_next(lfsr);
    const double err = compute_error(i_teach, i_sensory, p.alpha);
    const Direction dir = wta_direction(err, p.tie_band);
    if (dir == Direction::None) return 0;
    if (!stochastic_round(std::abs(err), dac(draw, p.i_lsb))) return 0;
    ++accepted;
    // The update signal counts as applied even if a side is pinned at its
    // saturation level.
    if (dir == Direction::Up) {
        if (exc_level < kLevelMax) ++exc_level;
        if (inh_level > 0) --inh_level;
        return +1;
    }
    if (exc_level > 0) --exc_level;
    if (inh_level < kLevelMax) ++inh_level;
    return -1;
}

}  // namespace sdo
