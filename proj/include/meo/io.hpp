#pragma once

#include <string>

#include "meo/hermitian.hpp"

namespace meo::io {

// State file schema, version 1:
// {
//   "schema_version": 1,
//   "dim": d,
//   "rho":   [[[re, im], ...], ...],   (d rows of d [re, im] pairs)
//   "sigma": [[[re, im], ...], ...]
// }
struct StateFile {
    int schema_version = 1;
    Hermitian rho;
    Hermitian sigma;
};

StateFile read_state_file(const std::string& path);
void write_state_file(const std::string& path, const Hermitian& rho, const Hermitian& sigma);

// Atomic write: contents go to a temp file in the same directory, renamed
// into place on success.
void write_file_atomic(const std::string& path, const std::string& contents);

// Shortest round-trip decimal for a binary64 (parses back to the same bits).
std::string format_double(double v);

}  // namespace meo::io
