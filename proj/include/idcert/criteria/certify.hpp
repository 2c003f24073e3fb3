#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "idcert/criteria/bounds.hpp"
#include "idcert/criteria/decomposition.hpp"
#include "idcert/ideal/section.hpp"

namespace idcert {

/// Identifiers of the three criteria, as used on the command line and in reports.
///  - prop31: rank-h flattening whose image meets the rank-one variety of V_B in a
///    scheme of length exactly h.
///  - prop33: the same flattening when h + dim SV_b = dim V_B, completed by a check on
///    the span of the given rank-one terms.
///  - thm37: full-rank catalecticant whose image misses the Veronese variety, for the
///    families (n, d, h, s) = (1, 2h-1, h, h-2), (2, 5, 7, 2), (3, 3, 5, 1).
enum class Criterion { prop31, prop33, thm37 };

enum class Verdict { certified, inconclusive };

struct Check {
  std::string name;
  std::string computed;
  std::string required;
  bool passed = false;

  friend bool operator==(const Check&, const Check&) = default;
};

/// Scheme classification attached to the check that produced it.
struct SectionRecord {
  std::string check;
  SchemeReport report;

  friend bool operator==(const SectionRecord&, const SectionRecord&) = default;
};

struct Certificate {
  /// nullopt when no criterion applies to the input
  std::optional<Criterion> criterion;
  std::vector<unsigned> sizes;
  Multidegree degrees;
  std::size_t h = 0;
  /// the flattening split, when one was used
  std::optional<Multidegree> split_a;
  std::optional<Multidegree> split_b;
  /// (n, d, h, s) for thm37
  std::optional<std::array<unsigned, 4>> quadruple;
  bool from_decomposition = false;

  std::vector<Check> checks;
  Verdict verdict = Verdict::inconclusive;
  /// the instance lies in the range where the criterion is proven effective
  bool effective = false;
  /// "qq" or "fp:<p>"
  std::string field = "qq";
  /// computed modulo a prime: a pass holds with high probability, not with proof
  bool probabilistic = false;
  double seconds = 0.0;
  std::string reason;
  /// human-readable progress lines
  std::vector<std::string> log;
  std::vector<SectionRecord> sections;

  bool certified() const noexcept { return verdict == Verdict::certified; }
  friend bool operator==(const Certificate&, const Certificate&) = default;
};

enum class CriterionChoice { automatic, prop31, prop33, thm37 };

struct CertifyOptions {
  /// nullopt: exact rationals; otherwise compute modulo this prime
  std::optional<std::uint32_t> prime;
  /// explicit a part of the flattening split
  std::optional<Multidegree> split_a;
  CriterionChoice criterion = CriterionChoice::automatic;
  SectionOptions section;
};

/// s such that (n, d, h, s) belongs to one of the empty-section families, if any.
std::optional<unsigned> empty_section_order(const TensorSpace& space, std::size_t h);

/// Split used by the decomposition criterion: minimal for one group; otherwise the
/// first split (balanced first, then lexicographic in a) with dim V_A >= h and
/// dim V_B = h + dim SV_b, falling back to the balanced split.
Split decomposition_split(const TensorSpace& space, std::size_t h);

/// Whether the purely numeric hypotheses of the decomposition criterion hold.
bool decomposition_arithmetic_holds(const TensorSpace& space, const Split& split, std::size_t h);

/// Flattening criterion (prop31). Throws DomainError if no split with dim V_A >= h
/// exists or the tensor does not live in `space`.
Certificate certify_flattening_section(const TensorSpace& space, const MPoly<RationalField>& t,
                                       std::size_t h, const CertifyOptions& options = {});

/// Decomposition criterion (prop33); h is the number of terms.
Certificate certify_decomposition_span(const Decomposition& dec, const CertifyOptions& options = {});

/// Empty-section criterion (thm37). Throws DomainError if (n, d, h) is outside the
/// three families.
Certificate certify_empty_section(const TensorSpace& space, const MPoly<RationalField>& f,
                                  std::size_t h, const CertifyOptions& options = {});

/// Dispatcher for a tensor and a rank: the empty-section family if it matches, then
/// the flattening criterion, otherwise Inconclusive ("out of criteria range").
Certificate certify(const TensorSpace& space, const MPoly<RationalField>& t, std::size_t h,
                    const CertifyOptions& options = {});

/// Dispatcher for a decomposition: the empty-section family if it matches; the
/// decomposition criterion when its numeric hypotheses hold; the flattening
/// criterion otherwise.
Certificate certify(const Decomposition& dec, const CertifyOptions& options = {});

std::string to_string(Criterion c);
Criterion parse_criterion(const std::string& id);
std::string criterion_title(Criterion c);
std::string to_string(Verdict v);

}  // namespace idcert
