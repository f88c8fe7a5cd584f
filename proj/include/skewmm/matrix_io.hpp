#pragma once

#include "skewmm/matrix.hpp"

#include <filesystem>
#include <string>
#include <string_view>

namespace skewmm {

// Text format "skewmm-matrix v1":
//
//   skewmm-matrix v1 p=<prime>\n
//   <p-1 lines of p-1 rationals separated by single spaces>\n
//
// Rationals are "n" or "n/d" in lowest terms with d > 1. Only the canonical
// form is accepted, so parse followed by serialize reproduces the input bytes.

struct MatrixFile {
    int p = 0;
    RatMatrix matrix;
};

std::string serialize_matrix(int p, const RatMatrix& m);

/// Throws FormatError on any deviation from the canonical form.
MatrixFile parse_matrix(std::string_view text);

/// Throws IoError when the file cannot be read, FormatError on bad contents.
MatrixFile read_matrix_file(const std::filesystem::path& path);
/// Throws IoError when the file cannot be written.
void write_matrix_file(const std::filesystem::path& path, int p, const RatMatrix& m);

}  // namespace skewmm
