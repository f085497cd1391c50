// Shared error taxonomy. Exit codes in the CLI map 1:1 onto these types.
#pragma once

#include <stdexcept>
#include <string>

namespace stego {

// Malformed input: image headers, config files, key files, bad arguments.
struct parse_error : std::runtime_error {
    explicit parse_error(const std::string& what) : std::runtime_error(what) {}
};

// Payload does not fit the cover at the given parameters.
struct capacity_error : std::runtime_error {
    explicit capacity_error(const std::string& what) : std::runtime_error(what) {}
};

// Extraction failed: no payload marker, bad frame, or CRC mismatch.
struct integrity_error : std::runtime_error {
    explicit integrity_error(const std::string& what) : std::runtime_error(what) {}
};

// RS shield could not reach its stop criterion.
struct shield_error : std::runtime_error {
    explicit shield_error(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace stego
