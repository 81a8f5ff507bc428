#pragma once

#include <stdexcept>
#include <string>

#include "homcalc/chain_complex.hpp"

namespace homcalc {

struct InterchangeError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Canonical textual form of a complex: a compact JSON document with fields
/// `name`, `cells` (dimension string -> list of cell names) and `boundaries`
/// (dimension string -> row-major matrix, [] when the matrix has no entries).
/// Entries that fit a 64-bit integer are written as JSON numbers, larger ones
/// as decimal strings. Keys are sorted and no whitespace is emitted, so
/// parse -> serialize is byte-identical on canonical documents.
std::string serialize_complex(const ChainComplex& c);

/// Throws InterchangeError on malformed input or shape mismatches.
ChainComplex parse_complex(const std::string& text);

} // namespace homcalc
