#include "sdo/dynamics.hpp"

#include <cmath>
#include <stdexcept>

namespace sdo {

ExpTrace decay(ExpTrace trace, double delta_t) {
    if (!(trace.tau > 0.0)) {
        throw std::invalid_argument("ExpTrace: tau must be > 0");
    }
    if (delta_t < 0.0) {
        throw std::invalid_argument("decay: delta_t must be >= 0");
    }
    trace.value *= std::exp(-delta_t / trace.tau);
    return trace;
}

ExpTrace inject(ExpTrace trace, double amount) {
    trace.value += amount;
    return trace;
}

void step_soma(NeuronState& n, double dt) {
    if (!(dt > 0.0)) {
        throw std::invalid_argument("step_soma: dt must be > 0");
    }
    const double drive = n.sensory.value + n.teach.value;
    step_soma_prefactored(n, drive, std::exp(-dt / n.soma.tau));
}

void step_soma_prefactored(NeuronState& n, double drive, double decay_factor) {
    n.soma.value = drive + (n.soma.value - drive) * decay_factor;
}

bool check_spike(NeuronState& n, double t_now) {
    if (n.soma.value >= n.threshold && t_now >= n.refractory_until) {
        n.soma.value = n.reset_value;
        n.refractory_until = t_now + n.refractory_period;
        ++n.spike_count;
        return true;
    }
    return false;
}

}  // namespace sdo
