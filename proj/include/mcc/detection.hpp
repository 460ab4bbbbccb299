#ifndef MCC_DETECTION_HPP
#define MCC_DETECTION_HPP

#include <cstdint>
#include <vector>

#include "mcc/bitstring.hpp"
#include "mcc/channel.hpp"

namespace mcc {

/// Adaptive threshold parameters: tau = a*r_min + (1-a)*r_max per chunk of
/// `spacing` intervals, plus the absolute floor `min` below which an
/// interval is never a 1.
struct DetectionParams {
    double scaling_a = 0.5;      // a in [0,1]
    std::size_t spacing = 4;     // chunk size, >= 1
    std::uint32_t min_count = 0; // minimum molecules for a 1-bit

    // r_min definition: smallest nonzero count of the chunk (the
    // generalized rule), or the original block-code rule that drops the
    // chunk's first interval instead.
    enum class RminMode { NonzeroMin, ExcludeFirst };
    RminMode rmin_mode = RminMode::NonzeroMin;
};

/// Threshold detection over a trace. Chunks are `spacing` intervals; the
/// last chunk absorbs the remainder when spacing does not divide the trace
/// length. An all-zero chunk detects as all zeros (r_min taken as infinite).
BitString detect(const ChannelTrace& trace, const DetectionParams& params);

/// In-place left-to-right sweep: a 1 forces the following bit to 0. Output
/// never contains consecutive 1s.
BitString correct(const BitString& bits);

} // namespace mcc

#endif
