#include "mcc/channel.hpp"

#include <cmath>

#include "mcc/common.hpp"
#include "mcc/rng.hpp"

namespace mcc {

void ChannelParams::validate() const {
    if (!(tx_distance_um > rx_radius_um) || !(rx_radius_um > 0))
        throw ModelError("channel geometry requires r0 > rR > 0");
    if (!(step_ms > 0) || step_ms > signal_interval_ms)
        throw ModelError("step size must be positive and at most the signal interval");
    const double ratio = signal_interval_ms / step_ms;
    if (std::abs(ratio - std::round(ratio)) > 1e-9)
        throw ModelError("signal interval must be divisible by the step size");
    if (diffusion_um2_per_s <= 0) throw ModelError("diffusion coefficient must be positive");
    if (noise_variance < 0) throw ModelError("noise variance must be nonnegative");
}

ChannelTrace simulate(const BitString& bits, const ChannelParams& params,
                      std::uint64_t rng_seed) {
    params.validate();
    ChannelTrace trace;
    trace.counts.assign(bits.size(), 0);
    if (bits.empty()) return trace;

    const double d_um2_per_ms = params.diffusion_um2_per_s / 1000.0;
    const double sigma = std::sqrt(2.0 * d_um2_per_ms * params.step_ms);
    const double rr2 = params.rx_radius_um * params.rx_radius_um;
    const std::uint64_t steps_per_interval =
        static_cast<std::uint64_t>(std::llround(params.signal_interval_ms / params.step_ms));
    const std::uint64_t total_steps = steps_per_interval * bits.size();
    const std::uint64_t max_age_steps =
        params.max_age_ms > 0
            ? static_cast<std::uint64_t>(std::llround(params.max_age_ms / params.step_ms))
            : total_steps;

    for (std::size_t interval = 0; interval < bits.size(); ++interval) {
        if (!bits[interval]) continue;
        const std::uint64_t birth = interval * steps_per_interval;
        const std::uint64_t horizon = std::min(total_steps, birth + max_age_steps);
        for (std::uint32_t p = 0; p < params.molecules_per_one; ++p) {
            Rng rng(mix_seed(rng_seed, 0x6d6f6cULL, interval, p));
            double x = params.tx_distance_um, y = 0.0, z = 0.0;
            for (std::uint64_t step = birth; step < horizon; ++step) {
                x += sigma * rng.next_normal();
                y += sigma * rng.next_normal();
                z += sigma * rng.next_normal();
                if (x * x + y * y + z * z <= rr2) {
                    ++trace.counts[step / steps_per_interval];
                    break;
                }
            }
        }
    }

    if (params.noise_variance > 0) {
        Rng rng(mix_seed(rng_seed, 0x6e6f69ULL));
        const double sd = std::sqrt(params.noise_variance);
        for (auto& c : trace.counts) {
            const double noisy = static_cast<double>(c) + sd * rng.next_normal();
            c = noisy <= 0 ? 0 : static_cast<std::uint32_t>(std::llround(noisy));
        }
    }
    return trace;
}

} // namespace mcc
