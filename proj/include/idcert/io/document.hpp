#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <variant>

#include "idcert/criteria/decomposition.hpp"

namespace idcert {

/// A certification input. Text form, one directive per line, '#' starts a comment:
///
///   sizes 3
///   degrees 5
///   h 7                      (optional)
///   field fp:1073741789      (optional: qq or fp[:P])
///   seed 1                   (optional, informational)
///   polynomial x1_0^5 + ...  (may continue on the following lines)
///
/// or, instead of `polynomial`, a `decomposition` line followed by one term per line:
///
///   [lambda :] c,c,c | c,c
///
/// with one comma-separated coefficient vector per group.
struct InputDocument {
  TensorSpace space{{2}, {1}};
  std::optional<std::size_t> h;
  std::optional<std::string> field;
  std::optional<std::uint64_t> seed;
  std::variant<MPoly<RationalField>, Decomposition> payload;

  bool is_decomposition() const { return std::holds_alternative<Decomposition>(payload); }
};

/// Throws ParseError (byte offset into `text`) or DomainError (invalid space,
/// non-multihomogeneous polynomial, invalid decomposition).
InputDocument parse_document(std::string_view text);

std::string format_document(const InputDocument& doc);

}  // namespace idcert
