#include "mcc/detection.hpp"

#include <limits>

#include "mcc/common.hpp"

namespace mcc {

BitString detect(const ChannelTrace& trace, const DetectionParams& params) {
    if (trace.size() == 0) throw ModelError("detect requires a nonempty trace");
    if (params.spacing < 1) throw ModelError("spacing must be at least 1");
    if (params.scaling_a < 0.0 || params.scaling_a > 1.0)
        throw ModelError("scaling coefficient must be in [0,1]");

    const std::size_t n = trace.size();
    const std::size_t chunks = n < params.spacing ? 1 : n / params.spacing;

    BitString out;
    for (std::size_t c = 0; c < chunks; ++c) {
        const std::size_t begin = c * params.spacing;
        const std::size_t end = (c + 1 == chunks) ? n : begin + params.spacing;

        double r_max = 0.0;
        double r_min = std::numeric_limits<double>::infinity();
        for (std::size_t i = begin; i < end; ++i) {
            const double v = trace[i];
            if (v > r_max) r_max = v;
            if (params.rmin_mode == DetectionParams::RminMode::NonzeroMin) {
                if (v > 0 && v < r_min) r_min = v;
            } else if (i != begin && v < r_min) {
                r_min = v;
            }
        }
        double tau;
        if (r_max == 0.0 || r_min == std::numeric_limits<double>::infinity())
            tau = std::numeric_limits<double>::infinity();
        else
            tau = params.scaling_a * r_min + (1.0 - params.scaling_a) * r_max;

        for (std::size_t i = begin; i < end; ++i) {
            const double v = trace[i];
            out.push_back(v >= tau && v >= params.min_count ? 1 : 0);
        }
    }
    return out;
}

BitString correct(const BitString& bits) {
    BitString out = bits;
    std::vector<std::uint8_t> b(out.data());
    for (std::size_t j = 0; j + 1 < b.size(); ++j)
        if (b[j] == 1) b[j + 1] = 0;
    return BitString(std::move(b));
}

} // namespace mcc
