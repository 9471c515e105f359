#ifndef MORSEWIG_IO_HPP
#define MORSEWIG_IO_HPP

#include <string>
#include <vector>

#include "json.hpp"
#include "morsewig/mellin.hpp"
#include "morsewig/model.hpp"

namespace morsewig {

// CSV with header x,p,re,im,err; shortest round-trip formatting so the file
// reproduces the doubles bit for bit.
void write_field_csv(const std::string& path, const WignerField& field);

// JSON envelope ("schema": "moyal-morse/1") carrying parameters, labels,
// contour settings, grids, values and the per-point failure mask.
// from/to round-trips are bit exact.
nlohmann::ordered_json field_to_json(const WignerField& field,
                                     const MorseSystem& sys,
                                     const SpectralLabel& left,
                                     const SpectralLabel& right,
                                     const ContourSpec& contour);

WignerField field_from_json(const nlohmann::ordered_json& j);

// FNV-1a 64-bit digest of a file's bytes, as 16 hex characters.
std::string file_digest(const std::string& path);

// Record of one CLI run: command line, effective configuration, and digests
// of every file the run produced.
struct RunManifest {
    std::string command_line;
    std::string version;    // tool version string
    std::string timestamp;  // ISO-8601, filled by the caller
    nlohmann::ordered_json config;
    std::vector<std::string> outputs;
};

void write_manifest(const std::string& path, const RunManifest& m);

std::string format_double(double v);  // shortest representation that round-trips

}  // namespace morsewig

#endif
