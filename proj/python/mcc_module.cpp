#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "mcc/harness.hpp"
#include "mcc/io.hpp"

namespace py = pybind11;
using namespace mcc;

namespace {

Alphabet make_alphabet(const std::vector<std::string>& symbols,
                       const std::vector<std::string>& probs, py::object eof_index) {
    std::optional<std::size_t> eof;
    if (!eof_index.is_none()) eof = eof_index.cast<std::size_t>();
    return Alphabet(symbols, probs, eof);
}

std::optional<std::size_t> opt_hint(py::object hint) {
    if (hint.is_none()) return std::nullopt;
    return hint.cast<std::size_t>();
}

} // namespace

PYBIND11_MODULE(_mcc, m) {
    m.doc() = "ISI-mitigating source codecs for molecular communication";

    py::class_<Alphabet>(m, "Alphabet")
        .def(py::init(&make_alphabet), py::arg("symbols"), py::arg("probs"),
             py::arg("eof_index") = py::none())
        .def_property_readonly("symbols", &Alphabet::symbols)
        .def_property_readonly("eof_index",
                               [](const Alphabet& a) -> py::object {
                                   if (!a.eof_index()) return py::none();
                                   return py::cast(*a.eof_index());
                               })
        .def("__len__", &Alphabet::size);
    m.def("alphabet1", &alphabet1);
    m.def("alphabet2", &alphabet2);
    m.def("alphabet_ratio", &alphabet_ratio);
    m.def("read_alphabet_file", &read_alphabet_file);

    py::class_<SchemeCodec>(m, "Codec")
        .def(py::init([](const Alphabet& a, const std::string& scheme, int precision) {
                 return SchemeCodec(a, scheme_from_name(scheme), precision);
             }),
             py::arg("alphabet"), py::arg("scheme"), py::arg("precision_bits") = 20)
        .def("encode",
             [](const SchemeCodec& c, const std::vector<std::string>& word) {
                 return c.encode(word_from_tokens(c.alphabet(), word)).str();
             })
        .def("decode",
             [](const SchemeCodec& c, const std::string& bits, py::object hint) {
                 const Word w = c.decode(BitString::from_string(bits), opt_hint(hint));
                 std::vector<std::string> out;
                 for (Symbol s : w) out.push_back(c.alphabet().symbol(s));
                 return out;
             },
             py::arg("bits"), py::arg("length_hint") = py::none())
        .def_property_readonly("constrained", &SchemeCodec::constrained);

    m.def("sample_word", [](const Alphabet& a, std::size_t len, std::uint64_t seed) {
        std::vector<std::string> out;
        for (Symbol s : sample_word(a, len, seed)) out.push_back(a.symbol(s));
        return out;
    });

    m.def("count_codes", [](int n) { return count_codes(n).convert_to<std::uint64_t>(); });
    m.def("count_ones", [](int n) { return count_ones(n).convert_to<std::uint64_t>(); });
    m.def("one_bit_density", &one_bit_density);
    m.def("length_ratio_limit", &length_ratio_limit);
    m.def("moac_interval", [](const std::string& bits, int phi_bits) {
        const IntervalQ iv = moac_interval(BitString::from_string(bits), phi_bits);
        return py::make_tuple(to_double(iv.lo_rational()), to_double(iv.hi_rational()));
    });

    py::class_<ChannelParams>(m, "ChannelParams")
        .def(py::init<>())
        .def_readwrite("diffusion_um2_per_s", &ChannelParams::diffusion_um2_per_s)
        .def_readwrite("tx_distance_um", &ChannelParams::tx_distance_um)
        .def_readwrite("rx_radius_um", &ChannelParams::rx_radius_um)
        .def_readwrite("signal_interval_ms", &ChannelParams::signal_interval_ms)
        .def_readwrite("step_ms", &ChannelParams::step_ms)
        .def_readwrite("molecules_per_one", &ChannelParams::molecules_per_one)
        .def_readwrite("noise_variance", &ChannelParams::noise_variance)
        .def_readwrite("max_age_ms", &ChannelParams::max_age_ms);
    m.def("simulate", [](const std::string& bits, const ChannelParams& p, std::uint64_t seed) {
        return simulate(BitString::from_string(bits), p, seed).counts;
    });

    py::class_<DetectionParams>(m, "DetectionParams")
        .def(py::init<>())
        .def_readwrite("scaling_a", &DetectionParams::scaling_a)
        .def_readwrite("spacing", &DetectionParams::spacing)
        .def_readwrite("min_count", &DetectionParams::min_count);
    m.def("detect", [](const std::vector<std::uint32_t>& counts, const DetectionParams& p) {
        return detect(ChannelTrace{counts}, p).str();
    });
    m.def("correct",
          [](const std::string& bits) { return correct(BitString::from_string(bits)).str(); });

    py::class_<SchemeStats>(m, "SchemeStats")
        .def_readonly("expected_bits", &SchemeStats::expected_bits)
        .def_readonly("expected_ones", &SchemeStats::expected_ones);
    m.def("scheme_stats",
          [](const SchemeCodec& codec, std::size_t word_len, std::size_t samples,
             std::uint64_t seed) { return scheme_stats(codec, word_len, samples, seed); });

    py::class_<NormalizedConfig>(m, "NormalizedConfig")
        .def(py::init<>())
        .def_readwrite("signal_interval_ms", &NormalizedConfig::signal_interval_ms)
        .def_readwrite("molecules_per_one", &NormalizedConfig::molecules_per_one);
    m.def("normalize", [](const SchemeStats& base, const NormalizedConfig& cfg,
                          const SchemeStats& target) { return normalize(base, cfg, target); });

    py::register_exception<Error>(m, "McError");
}
