#include "sdo/network.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "sdo/seed.hpp"

namespace sdo {

bool event_less(const SpikeEvent& a, const SpikeEvent& b) {
    if (a.time != b.time) return a.time < b.time;
    if (a.kind != b.kind) return a.kind < b.kind;
    if (a.channel != b.channel) return a.channel < b.channel;
    return a.target < b.target;
}

namespace {

void validate_config(const NetworkConfig& c) {
    auto require = [](bool ok, const char* what) {
        if (!ok) throw std::invalid_argument(std::string("NetworkConfig: ") + what);
    };
    require(c.n_inputs > 0, "n_inputs must be > 0");
    require(c.n_outputs > 0, "n_outputs must be > 0");
    require(c.tau_soma > 0 && c.tau_sensory > 0 && c.tau_teach > 0,
            "time constants must be > 0");
    require(c.threshold > 0, "threshold must be > 0");
    require(c.refractory >= 0, "refractory must be >= 0");
    require(c.alpha > 0, "alpha must be > 0");
    require(c.i_lsb > 0, "i_lsb must be > 0 (derive it before building)");
    require(c.unit_current > 0, "unit_current must be > 0");
    require(c.tie_band >= 0, "tie_band must be >= 0");
    require(c.teach_weight >= 0, "teach_weight must be >= 0");
    require(c.dt > 0, "dt must be > 0");
}

}  // namespace

Network::Network(const NetworkConfig& cfg) : cfg_(cfg) {
    validate_config(cfg_);
    learn_ = LearningParams{cfg_.alpha, cfg_.i_lsb, cfg_.tie_band};
    clock_ = SimClock{cfg_.dt, 0.0};

    rows_.resize(cfg_.n_outputs);
    for (auto& r : rows_) {
        r.soma = ExpTrace{0.0, cfg_.tau_soma};
        r.sensory = ExpTrace{0.0, cfg_.tau_sensory};
        r.teach = ExpTrace{0.0, cfg_.tau_teach};
        r.threshold = cfg_.threshold;
        r.reset_value = cfg_.reset_value;
        r.refractory_period = cfg_.refractory;
    }

    learners_.resize(cfg_.n_outputs);
    for (std::uint32_t j = 0; j < cfg_.n_outputs; ++j) {
        learners_[j].lfsr.state = static_cast<std::uint8_t>(
            derive_seed(cfg_.master_seed, seed_stream::kRowLfsr, j) % 63 + 1);
    }

    const std::size_t n = static_cast<std::size_t>(cfg_.n_inputs) * cfg_.n_outputs;
    weights_.n_inputs = cfg_.n_inputs;
    weights_.n_outputs = cfg_.n_outputs;
    weights_.unit_current = cfg_.unit_current;
    weights_.exc.resize(n);
    weights_.inh.resize(n);
    // Uniform over {0..15}: 16 divides 2^64, so the modulo is unbiased.
    for (std::size_t k = 0; k < n; ++k) {
        weights_.exc[k] = static_cast<std::uint8_t>(
            derive_seed(cfg_.master_seed, seed_stream::kWeightExc, k) & 0xF);
        weights_.inh[k] = static_cast<std::uint8_t>(
            derive_seed(cfg_.master_seed, seed_stream::kWeightInh, k) & 0xF);
    }
}

void Network::set_weights(const SynapseMatrix& w) {
    if (w.n_inputs != cfg_.n_inputs || w.n_outputs != cfg_.n_outputs ||
        w.exc.size() != weights_.exc.size() || w.inh.size() != weights_.inh.size()) {
        throw std::invalid_argument("set_weights: shape mismatch");
    }
    for (std::size_t k = 0; k < w.exc.size(); ++k) {
        if (w.exc[k] > kLevelMax || w.inh[k] > kLevelMax) {
            throw std::invalid_argument("set_weights: level out of [0, 15]");
        }
    }
    weights_.exc = w.exc;
    weights_.inh = w.inh;
}

void Network::decay_branches_to(double t) {
    const double elapsed = t - t_branches_;
    if (elapsed < 0) {
        if (elapsed < -1e-9) {
            throw std::invalid_argument("Network: time must be non-decreasing");
        }
        return;  // same instant up to rounding
    }
    if (elapsed == 0) return;
    const double fs = std::exp(-elapsed / cfg_.tau_sensory);
    const double ft = std::exp(-elapsed / cfg_.tau_teach);
    for (auto& r : rows_) {
        r.sensory.value *= fs;
        r.teach.value *= ft;
    }
    t_branches_ = t;
}

void Network::on_sensory_spike(std::uint32_t input, double t) {
    if (input >= cfg_.n_inputs) {
        throw std::invalid_argument("on_sensory_spike: input out of range");
    }
    decay_branches_to(t);
    const std::size_t base = static_cast<std::size_t>(input) * cfg_.n_outputs;
    for (std::uint32_t j = 0; j < cfg_.n_outputs; ++j) {
        const std::size_t k = base + j;
        const double w_eff =
            (static_cast<double>(weights_.exc[k]) - static_cast<double>(weights_.inh[k])) *
            cfg_.unit_current;
        rows_[j].sensory.value += w_eff;
        if (learning_enabled_) {
            learners_[j].on_pre_spike(rows_[j].teach.value, rows_[j].sensory.value,
                                      learn_, weights_.exc[k], weights_.inh[k]);
        }
    }
}

void Network::on_teach_spike(std::uint32_t row, int sign, double t) {
    if (row >= cfg_.n_outputs) {
        throw std::invalid_argument("on_teach_spike: row out of range");
    }
    decay_branches_to(t);
    rows_[row].teach.value += (sign >= 0 ? 1.0 : -1.0) * cfg_.teach_weight;
}

void Network::apply_event(const SpikeEvent& e, double t_abs) {
    switch (e.kind) {
        case SpikeKind::Sensory:
            on_sensory_spike(e.channel, t_abs);
            break;
        case SpikeKind::TeachPositive:
            on_teach_spike(e.target, +1, t_abs);
            break;
        case SpikeKind::TeachNegative:
            on_teach_spike(e.target, -1, t_abs);
            break;
        default:
            throw std::invalid_argument("apply_event: unknown kind");
    }
}

WindowResult Network::run_window(std::span<const SpikeEvent> events, double duration,
                                 const std::optional<TraceProbe>& probe) {
    if (duration < 0) throw std::invalid_argument("run_window: negative duration");
    const auto n_steps = static_cast<std::uint64_t>(std::llround(duration / cfg_.dt));
    const double effective_duration = static_cast<double>(n_steps) * cfg_.dt;
    for (std::size_t k = 0; k < events.size(); ++k) {
        const auto& e = events[k];
        if (k > 0 && event_less(e, events[k - 1])) {
            throw std::invalid_argument("run_window: unsorted event stream");
        }
        if (e.time < 0 || e.time >= effective_duration) {
            throw std::invalid_argument("run_window: event outside window");
        }
        if (e.kind == SpikeKind::Sensory) {
            if (e.channel >= cfg_.n_inputs)
                throw std::invalid_argument("run_window: sensory channel out of range");
        } else {
            if (e.target >= cfg_.n_outputs)
                throw std::invalid_argument("run_window: teach target out of range");
        }
    }

    WindowResult res;
    res.spike_counts.assign(cfg_.n_outputs, 0);
    const std::uint64_t updates0 = total_updates();
    const std::uint64_t decisions0 = total_decisions();
    double err0 = 0.0;
    for (const auto& l : learners_) err0 += l.err_abs_sum;

    const double t0 = clock_.now;
    const double soma_k = std::exp(-cfg_.dt / cfg_.tau_soma);

    std::size_t probe_pair = 0;
    std::uint64_t probe_stride = 0;
    if (probe) {
        if (probe->row >= cfg_.n_outputs || probe->input >= cfg_.n_inputs) {
            throw std::invalid_argument("run_window: probe out of range");
        }
        probe_pair = weights_.index(probe->input, probe->row);
        probe_stride = std::max<std::uint64_t>(
            1, static_cast<std::uint64_t>(std::llround(probe->interval / cfg_.dt)));
        res.trace.push_back(TraceSample{t0, rows_[probe->row].sensory.value,
                                        rows_[probe->row].teach.value,
                                        rows_[probe->row].soma.value,
                                        weights_.exc[probe_pair],
                                        weights_.inh[probe_pair]});
    }

    std::size_t ev = 0;
    for (std::uint64_t k = 0; k < n_steps; ++k) {
        const double t_end = t0 + static_cast<double>(k + 1) * cfg_.dt;
        while (ev < events.size() && t0 + events[ev].time < t_end) {
            apply_event(events[ev], t0 + events[ev].time);
            ++ev;
        }
        decay_branches_to(t_end);
        for (std::uint32_t j = 0; j < cfg_.n_outputs; ++j) {
            auto& r = rows_[j];
            step_soma_prefactored(r, r.sensory.value + r.teach.value, soma_k);
            if (check_spike(r, t_end)) ++res.spike_counts[j];
        }
        if (probe && (k + 1) % probe_stride == 0) {
            res.trace.push_back(TraceSample{t_end, rows_[probe->row].sensory.value,
                                            rows_[probe->row].teach.value,
                                            rows_[probe->row].soma.value,
                                            weights_.exc[probe_pair],
                                            weights_.inh[probe_pair]});
        }
    }
    clock_.now = t0 + static_cast<double>(n_steps) * cfg_.dt;
    // Events that land exactly on the final step boundary after rounding.
    while (ev < events.size()) {
        apply_event(events[ev], clock_.now);
        ++ev;
    }
    decay_branches_to(clock_.now);

    res.updates = total_updates() - updates0;
    res.decisions = total_decisions() - decisions0;
    double err1 = 0.0;
    for (const auto& l : learners_) err1 += l.err_abs_sum;
    res.err_abs_sum = err1 - err0;
    return res;
}

std::uint64_t Network::total_updates() const {
    std::uint64_t n = 0;
    for (const auto& l : learners_) n += l.accepted;
    return n;
}

std::uint64_t Network::total_decisions() const {
    std::uint64_t n = 0;
    for (const auto& l : learners_) n += l.decisions;
    return n;
}

std::uint32_t classify(std::span<const std::uint32_t> spike_counts) {
    if (spike_counts.empty()) {
        throw std::invalid_argument("classify: empty counts");
    }
    const auto it = std::max_element(spike_counts.begin(), spike_counts.end());
    return static_cast<std::uint32_t>(it - spike_counts.begin());
}

}  // namespace sdo
