#pragma once

#include <string>

#include "idcert/criteria/certify.hpp"

namespace idcert {

inline constexpr int kReportSchemaVersion = 1;

/// JSON record of a certificate, including the Hilbert profile traces. Keys are
/// emitted in a fixed order, so format(parse(s)) == s for every emitted s.
std::string format_json(const Certificate& c);

/// Throws ParseError on malformed JSON or an unsupported schema version.
Certificate parse_json(const std::string& text);

struct TextOptions {
  /// also print the Hilbert profile of each section
  bool trace = false;
};

/// Progress lines followed by the verdict and the check table.
std::string format_text(const Certificate& c, const TextOptions& options = {});

}  // namespace idcert
