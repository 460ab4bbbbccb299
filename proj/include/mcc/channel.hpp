#ifndef MCC_CHANNEL_HPP
#define MCC_CHANNEL_HPP

#include <cstdint>
#include <vector>

#include "mcc/bitstring.hpp"

namespace mcc {

/// Diffusion channel geometry and timing. Lengths in micrometres, times in
/// milliseconds; D is given in um^2/s and converted internally.
struct ChannelParams {
    double diffusion_um2_per_s = 79.4; // D
    double tx_distance_um = 10.0;      // r0, transmitter to receiver centre
    double rx_radius_um = 5.0;         // rR
    double signal_interval_ms = 200.0; // ts
    double step_ms = 1.0;              // dt
    std::uint32_t molecules_per_one = 100;
    double noise_variance = 0.0; // Gaussian counting noise, 0 in all experiments
    // Molecules older than this are dropped; 0 keeps them forever. The
    // absorbing sphere captures at most rR/r0 of the emitted mass, so far
    // wanderers contribute only a thin late tail; dropping them bounds the
    // cost of long back-to-back transmissions.
    double max_age_ms = 0.0;

    void validate() const;
};

/// Absorbed-molecule counts, one entry per signal interval.
struct ChannelTrace {
    std::vector<std::uint32_t> counts;

    std::size_t size() const { return counts.size(); }
    std::uint32_t operator[](std::size_t i) const { return counts[i]; }
};

/// Particle-tracking simulation of BCSK transmission: each 1-bit releases
/// molecules_per_one particles at the transmitter at the start of its
/// interval; every particle does an independent Gaussian random walk with
/// per-axis variance 2*D*dt per step and is absorbed (and counted) when a
/// step ends inside the receiver sphere. Surviving particles keep walking
/// into later intervals, which is the channel's inter-symbol interference.
/// Per-particle RNG substreams are derived from (seed, interval, particle),
/// so counts are independent of particle iteration order.
ChannelTrace simulate(const BitString& bits, const ChannelParams& params, std::uint64_t rng_seed);

} // namespace mcc

#endif
