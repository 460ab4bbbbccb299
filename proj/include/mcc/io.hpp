#ifndef MCC_IO_HPP
#define MCC_IO_HPP

#include <iosfwd>
#include <map>
#include <string>

#include "mcc/detection.hpp"
#include "mcc/harness.hpp"
#include "mcc/prefix.hpp"
#include "mcc/source_model.hpp"

namespace mcc {

/// Alphabet definition: one `symbol probability [eof]` line per symbol,
/// '#' starts a comment.
Alphabet read_alphabet(std::istream& in);
Alphabet read_alphabet_file(const std::string& path);
void write_alphabet(std::ostream& out, const Alphabet& a);

/// Codebook as `symbol bits` lines for an alphabet's symbols.
void write_codebook(std::ostream& out, const Alphabet& a, const Codebook& book);
Codebook read_codebook(std::istream& in, const Alphabet& a);

/// Calibration store: one line per (scheme, molecule count) holding the
/// detection parameters.
struct CalibrationEntry {
    std::string scheme;
    std::uint32_t molecules = 0;
    DetectionParams params;
};
void write_calibrations(std::ostream& out, const std::vector<CalibrationEntry>& entries);
std::vector<CalibrationEntry> read_calibrations(std::istream& in);

/// key=value channel/run configuration; unknown keys are an error.
ChannelParams read_channel_config(std::istream& in);
ChannelParams read_channel_config_file(const std::string& path);
std::map<std::string, std::string> read_key_values(std::istream& in);

void write_csv(std::ostream& out, const Table& table);

} // namespace mcc

#endif
