#include "mcc/io.hpp"

#include <fstream>
#include <iomanip>
#include <sstream>

namespace mcc {

namespace {

std::vector<std::string> tokenize(const std::string& line) {
    std::vector<std::string> out;
    std::istringstream ss(line);
    std::string tok;
    while (ss >> tok) {
        if (tok[0] == '#') break;
        out.push_back(tok);
    }
    return out;
}

} // namespace

Alphabet read_alphabet(std::istream& in) {
    std::vector<std::string> symbols, probs;
    std::optional<std::size_t> eof_index;
    std::string line;
    while (std::getline(in, line)) {
        const auto toks = tokenize(line);
        if (toks.empty()) continue;
        if (toks.size() < 2 || toks.size() > 3)
            throw IoError("alphabet line must be: symbol probability [eof]");
        if (toks.size() == 3) {
            if (toks[2] != "eof") throw IoError("unknown alphabet flag: " + toks[2]);
            if (eof_index) throw IoError("multiple eof symbols");
            eof_index = symbols.size();
        }
        symbols.push_back(toks[0]);
        probs.push_back(toks[1]);
    }
    if (symbols.empty()) throw IoError("empty alphabet definition");
    return Alphabet(symbols, probs, eof_index);
}

Alphabet read_alphabet_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open alphabet file: " + path);
    return read_alphabet(in);
}

void write_alphabet(std::ostream& out, const Alphabet& a) {
    for (std::size_t i = 0; i < a.size(); ++i) {
        out << a.symbol(static_cast<Symbol>(i)) << ' ' << a.prob(static_cast<Symbol>(i));
        if (a.eof_index() && *a.eof_index() == i) out << " eof";
        out << '\n';
    }
}

void write_codebook(std::ostream& out, const Alphabet& a, const Codebook& book) {
    for (std::size_t i = 0; i < a.size(); ++i)
        out << a.symbol(static_cast<Symbol>(i)) << ' '
            << book.code(static_cast<Symbol>(i)).str() << '\n';
}

Codebook read_codebook(std::istream& in, const Alphabet& a) {
    std::vector<BitString> codes(a.size());
    std::vector<bool> seen(a.size(), false);
    std::string line;
    while (std::getline(in, line)) {
        const auto toks = tokenize(line);
        if (toks.empty()) continue;
        if (toks.size() != 2) throw IoError("codebook line must be: symbol bits");
        const auto sym = a.find(toks[0]);
        if (!sym) throw IoError("unknown symbol in codebook: " + toks[0]);
        codes[*sym] = BitString::from_string(toks[1]);
        seen[*sym] = true;
    }
    for (std::size_t i = 0; i < a.size(); ++i)
        if (!seen[i]) throw IoError("codebook misses symbol: " + a.symbol(static_cast<Symbol>(i)));
    return Codebook(a, std::move(codes));
}

void write_calibrations(std::ostream& out, const std::vector<CalibrationEntry>& entries) {
    for (const auto& e : entries) {
        out << "scheme=" << e.scheme << " molecules=" << e.molecules
            << " a=" << std::setprecision(10) << e.params.scaling_a
            << " spacing=" << e.params.spacing << " min=" << e.params.min_count << " rmin="
            << (e.params.rmin_mode == DetectionParams::RminMode::NonzeroMin ? "nonzero-min"
                                                                            : "exclude-first")
            << '\n';
    }
}

std::vector<CalibrationEntry> read_calibrations(std::istream& in) {
    std::vector<CalibrationEntry> out;
    std::string line;
    while (std::getline(in, line)) {
        const auto toks = tokenize(line);
        if (toks.empty()) continue;
        CalibrationEntry e;
        for (const auto& tok : toks) {
            const auto eq = tok.find('=');
            if (eq == std::string::npos) throw IoError("calibration token must be key=value");
            const std::string key = tok.substr(0, eq), value = tok.substr(eq + 1);
            if (key == "scheme")
                e.scheme = value;
            else if (key == "molecules")
                e.molecules = static_cast<std::uint32_t>(std::stoul(value));
            else if (key == "a")
                e.params.scaling_a = std::stod(value);
            else if (key == "spacing")
                e.params.spacing = static_cast<std::size_t>(std::stoul(value));
            else if (key == "min")
                e.params.min_count = static_cast<std::uint32_t>(std::stoul(value));
            else if (key == "rmin")
                e.params.rmin_mode = value == "exclude-first"
                                         ? DetectionParams::RminMode::ExcludeFirst
                                         : DetectionParams::RminMode::NonzeroMin;
            else
                throw IoError("unknown calibration key: " + key);
        }
        out.push_back(e);
    }
    return out;
}

std::map<std::string, std::string> read_key_values(std::istream& in) {
    std::map<std::string, std::string> out;
    std::string line;
    while (std::getline(in, line)) {
        const auto toks = tokenize(line);
        for (const auto& tok : toks) {
            const auto eq = tok.find('=');
            if (eq == std::string::npos) throw IoError("expected key=value, got: " + tok);
            out[tok.substr(0, eq)] = tok.substr(eq + 1);
        }
    }
    return out;
}

ChannelParams read_channel_config(std::istream& in) {
    ChannelParams p;
    for (const auto& [key, value] : read_key_values(in)) {
        if (key == "D")
            p.diffusion_um2_per_s = std::stod(value);
        else if (key == "r0")
            p.tx_distance_um = std::stod(value);
        else if (key == "rR")
            p.rx_radius_um = std::stod(value);
        else if (key == "ts")
            p.signal_interval_ms = std::stod(value);
        else if (key == "dt")
            p.step_ms = std::stod(value);
        else if (key == "M")
            p.molecules_per_one = static_cast<std::uint32_t>(std::stoul(value));
        else if (key == "noise_variance")
            p.noise_variance = std::stod(value);
        else if (key == "max_age_ms")
            p.max_age_ms = std::stod(value);
        else
            throw IoError("unknown channel key: " + key);
    }
    p.validate();
    return p;
}

ChannelParams read_channel_config_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open channel config: " + path);
    return read_channel_config(in);
}

void write_csv(std::ostream& out, const Table& table) {
    for (std::size_t i = 0; i < table.header.size(); ++i)
        out << table.header[i] << (i + 1 < table.header.size() ? "," : "\n");
    out << std::setprecision(10);
    for (const auto& row : table.rows) {
        for (std::size_t i = 0; i < row.size(); ++i)
            out << row[i] << (i + 1 < row.size() ? "," : "\n");
    }
}

} // namespace mcc
