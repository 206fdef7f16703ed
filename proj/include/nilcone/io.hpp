#pragma once

#include <string>
#include <string_view>

#include "nilcone/sheets.hpp"

namespace nilcone {

/// JSON element document:
///   {"n": 2, "module": "enhanced" | "exotic", "field": {"type": "Q"} | {"type": "Fp", "p": 5},
///    "v": ["1", "-1/2"], "x": [["0", "1"], ["0", "0"]]}
/// For exotic elements n is the rank and v, x have size 2n.
std::string element_to_json(const AnyElement& e, int indent = 2);
/// Throws ParseError (and the element constructors' errors).
AnyElement element_from_json(std::string_view text);
/// Throws IOError when the file cannot be read.
AnyElement read_element_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& text);

}  // namespace nilcone
