#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include "rkstab/polynomial.hpp"

namespace rkstab {

/// Tableau documents are JSON objects:
///
///   { "s": 3,
///     "A": [["0","0","0"], ["1","0","0"], ["1/2","1/2","0"]],
///     "b": ["1/2","1/2","0"],
///     "c": ["0","1","1"],
///     "bhat": ["1","-1/6","1/6"] }            // optional
///
/// Entries are strings accepted by parse_rational (JSON integers are also
/// taken as exact). Unknown top-level keys are ignored. Throws
/// std::invalid_argument on malformed documents and InvalidMethod when the
/// tableau is not explicit.
ButcherTableau parse_tableau(std::string_view document);

ButcherTableau load_tableau(const std::filesystem::path& path);

/// Inverse of parse_tableau; entries written as exact "p/q" strings.
std::string serialize_tableau(const ButcherTableau& tableau);

}  // namespace rkstab
