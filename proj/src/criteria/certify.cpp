#include "idcert/criteria/certify.hpp"

#include <chrono>

#include "idcert/errors.hpp"

namespace idcert {

namespace {

std::string str(std::uint64_t v) { return std::to_string(v); }

void add_check(Certificate& c, std::string name, std::string computed, std::string required,
               bool passed) {
  c.checks.push_back({std::move(name), std::move(computed), std::move(required), passed});
}

bool all_passed(const Certificate& c) {
  if (c.checks.empty()) return false;
  for (const auto& ch : c.checks)
    if (!ch.passed) return false;
  return true;
}

Certificate skeleton(const TensorSpace& space, std::size_t h) {
  Certificate c;
  c.sizes = space.group_sizes();
  c.degrees = space.degrees();
  c.h = h;
  return c;
}

void set_field(Certificate& c, const RationalField&) {
  c.field = "qq";
  c.probabilistic = false;
}
void set_field(Certificate& c, const PrimeField& f) {
  c.field = f.name();
  c.probabilistic = true;
}

void record_split(Certificate& c, const Split& split) {
  c.split_a = split.a;
  c.split_b = split.b;
}

std::string describe_dimension(const SchemeReport& r) {
  switch (r.status) {
    case SchemeStatus::empty: return "empty";
    case SchemeStatus::zero_dimensional: return "0";
    case SchemeStatus::positive_dimensional: return std::to_string(r.dimension);
    case SchemeStatus::inconclusive: return "unknown";
  }
  return "unknown";
}

/// Finishes a certificate: verdict from the checks, closing log line.
void conclude(Certificate& c, const std::string& certified_line) {
  c.verdict = all_passed(c) ? Verdict::certified : Verdict::inconclusive;
  if (c.certified()) {
    c.reason.clear();
    c.log.push_back(certified_line);
    return;
  }
  if (c.reason.empty()) {
    for (const auto& ch : c.checks) {
      if (!ch.passed) {
        c.reason = "check " + ch.name + " failed: computed " + ch.computed + ", required " +
                   ch.required;
        break;
      }
    }
  }
  c.log.push_back("inconclusive: " + c.reason);
}

template <class Field>
Field make_field(const CertifyOptions& options);
template <>
RationalField make_field<RationalField>(const CertifyOptions&) {
  return RationalField{};
}
template <>
PrimeField make_field<PrimeField>(const CertifyOptions& options) {
  return PrimeField(options.prime.value_or(kDefaultPrime));
}

/// Flattening-rank and section checks shared by the flattening and decomposition
/// criteria. Returns false once a check failed and the rest was skipped.
template <class Field>
bool flattening_checks(Certificate& c, const TensorSpace& space, const MPoly<Field>& t,
                       const Split& split, std::size_t h, bool require_length,
                       const CertifyOptions& options) {
  Flattening<Field> fl = flatten(t, space, split);
  c.log.push_back("flattening " + format_multidegree(split.a) + " | " +
                  format_multidegree(split.b) + ": " + str(fl.matrix.rows()) + " x " +
                  str(fl.matrix.cols()) + ", rank " + str(fl.rank));
  add_check(c, "flattening_rank", str(fl.rank), str(h), fl.rank == h);
  if (fl.rank != h) return false;

  Ideal<Field> ideal = pullback_linear_section(image_span(fl), space, split.b);
  SchemeReport rep = classify_linear_section(
      ideal, require_length ? std::optional<std::uint64_t>(h) : std::nullopt, options.section);
  c.log.push_back("section of the rank-one variety of multidegree " + format_multidegree(split.b) +
                  " (" + str(ideal.generators.size()) + " equations): " + rep.describe());
  const bool zero_dim = rep.status == SchemeStatus::zero_dimensional;
  add_check(c, "section_dimension", describe_dimension(rep), "0", zero_dim);
  if (require_length) {
    const std::string len = zero_dim ? str(rep.length) : "n/a";
    add_check(c, "section_length", len, str(h), zero_dim && rep.length == h);
  }
  if (rep.status == SchemeStatus::inconclusive && c.reason.empty()) c.reason = rep.note;
  c.sections.push_back({"section_dimension", std::move(rep)});
  return c.checks.back().passed;
}

template <class Field>
Certificate flattening_impl(const TensorSpace& space, const MPoly<RationalField>& tq, std::size_t h,
                            const CertifyOptions& options, bool specific) {
  if (h < 1) throw DomainError("h must be positive");
  const Field field = make_field<Field>(options);
  require_characteristic(field, space);
  const Split split = options.split_a ? make_split(space, *options.split_a) : default_split(space, h);
  if (split.dim_a < h) {
    throw DomainError("split has dim V_A = " + str(split.dim_a) + " < h = " + str(h));
  }
  Certificate c = skeleton(space, h);
  c.criterion = Criterion::prop31;
  set_field(c, field);
  record_split(c, split);
  c.effective = effective_range(space, split, h);
  c.log.push_back("applying Proposition 3.1 (" + std::string(specific ? "specific " : "") +
                  std::to_string(h) + "-identifiability via the flattening " +
                  format_multidegree(split.a) + " | " + format_multidegree(split.b) + ")...");
  if (!c.effective) c.log.push_back("note: outside the range where the criterion is effective");
  MPoly<Field> t = map_coefficients(tq, field);
  flattening_checks(c, space, t, split, h, true, options);
  conclude(c, (specific ? "specific " : "") + std::to_string(h) + "-identifiability certified");
  return c;
}

template <class Field>
Certificate decomposition_impl(const Decomposition& dec, const CertifyOptions& options) {
  validate(dec);
  const TensorSpace& space = dec.space;
  const std::size_t h = dec.size();
  const Field field = make_field<Field>(options);
  require_characteristic(field, space);
  const Split split = options.split_a ? make_split(space, *options.split_a)
                                      : decomposition_split(space, h);

  Certificate c = skeleton(space, h);
  c.criterion = Criterion::prop33;
  c.from_decomposition = true;
  set_field(c, field);
  record_split(c, split);
  c.log.push_back("applying Proposition 3.3...");

  // numeric hypotheses first: they need no computation
  const std::uint64_t n = space.total_projective_dimension();
  add_check(c, "dimension_count", str(h + n), str(split.dim_b), h + n == split.dim_b);
  const mpz_class deg = segre_veronese_degree(space, split.b);
  add_check(c, "variety_degree", deg.get_str(), "<= " + str(h + 1), deg <= mpz_class(h + 1));
  c.effective = c.checks[0].passed && c.checks[1].passed;
  if (!c.effective || split.dim_a < h) {
    if (split.dim_a < h) {
      add_check(c, "flattening_rank", "n/a", str(h), false);
      c.reason = "split has dim V_A = " + str(split.dim_a) + " < h = " + str(h);
    }
    conclude(c, "");
    return c;
  }

  MPoly<Field> t = expand(dec, field);
  if (!flattening_checks(c, space, t, split, h, false, options)) {
    conclude(c, "");
    return c;
  }

  // span of the given rank-one points against the full-degree variety
  const std::vector<Monomial> basis = monomial_basis(space, space.degrees());
  const MonomialIndex index = index_basis(basis);
  DenseMatrix<Field> span(field, 0, basis.size());
  for (const auto& term : dec.terms) {
    const auto row = coefficient_vector(expand_term(term, space, field), index, basis.size());
    span.append_row(row);
  }
  Ideal<Field> ideal = pullback_linear_section(span, space, space.degrees());
  SchemeReport rep = classify_linear_section(ideal, std::optional<std::uint64_t>(h), options.section);
  c.log.push_back("span of the " + str(h) + " rank-one terms meets the variety of multidegree " +
                  format_multidegree(space.degrees()) + " in: " + rep.describe());
  const bool ok = rep.status == SchemeStatus::zero_dimensional && rep.length == h;
  add_check(c, "terms_span_section", rep.describe(), "ZeroDim(" + str(h) + ")", ok);
  if (rep.status == SchemeStatus::inconclusive && c.reason.empty()) c.reason = rep.note;
  c.sections.push_back({"terms_span_section", std::move(rep)});
  conclude(c, std::to_string(h) + "-identifiability certified");
  return c;
}

template <class Field>
Certificate empty_section_impl(const TensorSpace& space, const MPoly<RationalField>& fq,
                               std::size_t h, const CertifyOptions& options) {
  const auto s = empty_section_order(space, h);
  if (!s) {
    const std::string n = space.symmetric() ? std::to_string(space.projective_dimension(0)) : "-";
    throw DomainError("(n, d, h) = (" + n + ", " + std::to_string(space.degrees()[0]) + ", " +
                      std::to_string(h) + ") is not in an empty-section family");
  }
  const Field field = make_field<Field>(options);
  require_characteristic(field, space);
  const unsigned n = space.projective_dimension(0);
  const unsigned d = space.degrees()[0];
  const Split split = make_split(space, {*s});

  Certificate c = skeleton(space, h);
  c.criterion = Criterion::thm37;
  c.effective = true;
  c.quadruple = std::array<unsigned, 4>{n, d, static_cast<unsigned>(h), *s};
  set_field(c, field);
  record_split(c, split);
  c.log.push_back("applying Theorem 3.7 (" + std::to_string(h) + "-identifiability for " +
                  std::to_string(n + 1) + "-forms of degree " + std::to_string(d) + ")...");

  MPoly<Field> f = map_coefficients(fq, field);
  Flattening<Field> fl = flatten(f, space, split);
  c.log.push_back("catalecticant of order " + std::to_string(*s) + ": " + str(fl.matrix.rows()) +
                  " x " + str(fl.matrix.cols()) + ", rank " + str(fl.rank));
  add_check(c, "catalecticant_rank", str(fl.rank), str(split.dim_a), fl.rank == split.dim_a);
  if (fl.rank == split.dim_a) {
    Ideal<Field> ideal = pullback_linear_section(image_span(fl), space, split.b);
    SchemeReport rep = classify_linear_section(ideal, std::nullopt, options.section);
    c.log.push_back("span of the partials meets the Veronese variety of degree " +
                    std::to_string(d - *s) + " (" + str(ideal.generators.size()) +
                    " equations): " + rep.describe());
    add_check(c, "section_empty", rep.describe(), "Empty", rep.status == SchemeStatus::empty);
    if (rep.status == SchemeStatus::inconclusive) c.reason = rep.note;
    c.sections.push_back({"section_empty", std::move(rep)});
  }
  conclude(c, std::to_string(h) + "-identifiability certified");
  return c;
}

Certificate out_of_range(const TensorSpace& space, std::size_t h, bool decomposition) {
  Certificate c = skeleton(space, h);
  c.from_decomposition = decomposition;
  c.reason = "out of criteria range";
  add_check(c, "criterion_applicable", "none", "one of prop31, prop33, thm37", false);
  c.log.push_back("no criterion applies");
  c.log.push_back("inconclusive: " + c.reason);
  return c;
}

template <class Fn>
Certificate timed(Fn&& fn) {
  const auto start = std::chrono::steady_clock::now();
  Certificate c = fn();
  c.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return c;
}

bool has_admissible_split(const TensorSpace& space, std::size_t h) {
  try {
    default_split(space, h);
    return true;
  } catch (const DomainError&) {
    return false;
  }
}

}  // namespace

std::optional<unsigned> empty_section_order(const TensorSpace& space, std::size_t h) {
  if (!space.symmetric()) return std::nullopt;
  const unsigned n = space.projective_dimension(0);
  const unsigned d = space.degrees()[0];
  if (n == 1 && h >= 2 && d == 2 * h - 1) return static_cast<unsigned>(h - 2);
  if (n == 2 && d == 5 && h == 7) return 2u;
  if (n == 3 && d == 3 && h == 5) return 1u;
  return std::nullopt;
}

Split decomposition_split(const TensorSpace& space, std::size_t h) {
  if (space.symmetric()) return choose_split(space, h, SplitMode::minimal);
  auto good = [&](const Split& s) {
    return s.dim_a >= h && s.dim_b == h + variety_dimension(space, s.b);
  };
  std::optional<Split> balanced;
  try {
    balanced = choose_split(space, h, SplitMode::balanced);
    if (good(*balanced)) return *balanced;
  } catch (const DomainError&) {
  }
  const std::size_t p = space.factor_count();
  Multidegree a(p, 0);
  for (bool more = true; more;) {
    Split s = make_split(space, a);
    if (good(s)) return s;
    // odometer step, last factor fastest
    more = false;
    for (std::size_t i = p; i-- > 0;) {
      if (a[i] < space.degrees()[i]) {
        ++a[i];
        more = true;
        break;
      }
      a[i] = 0;
    }
  }
  if (balanced) return *balanced;
  return default_split(space, h);
}

bool decomposition_arithmetic_holds(const TensorSpace& space, const Split& split, std::size_t h) {
  const std::uint64_t n = space.total_projective_dimension();
  return split.dim_a >= h && h + n == split.dim_b &&
         segre_veronese_degree(space, split.b) <= mpz_class(h + 1);
}

Certificate certify_flattening_section(const TensorSpace& space, const MPoly<RationalField>& t,
                                       std::size_t h, const CertifyOptions& options) {
  return timed([&] {
    return options.prime ? flattening_impl<PrimeField>(space, t, h, options, true)
                         : flattening_impl<RationalField>(space, t, h, options, true);
  });
}

Certificate certify_decomposition_span(const Decomposition& dec, const CertifyOptions& options) {
  return timed([&] {
    return options.prime ? decomposition_impl<PrimeField>(dec, options)
                         : decomposition_impl<RationalField>(dec, options);
  });
}

Certificate certify_empty_section(const TensorSpace& space, const MPoly<RationalField>& f,
                                  std::size_t h, const CertifyOptions& options) {
  return timed([&] {
    return options.prime ? empty_section_impl<PrimeField>(space, f, h, options)
                         : empty_section_impl<RationalField>(space, f, h, options);
  });
}

Certificate certify(const TensorSpace& space, const MPoly<RationalField>& t, std::size_t h,
                    const CertifyOptions& options) {
  if (h < 1) throw DomainError("h must be positive");
  switch (options.criterion) {
    case CriterionChoice::prop31: return certify_flattening_section(space, t, h, options);
    case CriterionChoice::thm37: return certify_empty_section(space, t, h, options);
    case CriterionChoice::prop33:
      throw DomainError("the decomposition criterion needs a decomposition as input");
    case CriterionChoice::automatic: break;
  }
  if (!options.split_a && empty_section_order(space, h)) return certify_empty_section(space, t, h, options);
  if (options.split_a || has_admissible_split(space, h))
    return certify_flattening_section(space, t, h, options);
  return timed([&] { return out_of_range(space, h, false); });
}

Certificate certify(const Decomposition& dec, const CertifyOptions& options) {
  validate(dec);
  const TensorSpace& space = dec.space;
  const std::size_t h = dec.size();
  auto tensor = [&] { return expand(dec, RationalField{}); };
  auto as_decomposition = [](Certificate c) {
    c.from_decomposition = true;
    return c;
  };
  auto flattening = [&] {
    return as_decomposition(timed([&] {
      return options.prime ? flattening_impl<PrimeField>(space, tensor(), h, options, false)
                           : flattening_impl<RationalField>(space, tensor(), h, options, false);
    }));
  };
  switch (options.criterion) {
    case CriterionChoice::prop31: return flattening();
    case CriterionChoice::prop33: return certify_decomposition_span(dec, options);
    case CriterionChoice::thm37:
      return as_decomposition(certify_empty_section(space, tensor(), h, options));
    case CriterionChoice::automatic: break;
  }
  if (!options.split_a && empty_section_order(space, h))
    return as_decomposition(certify_empty_section(space, tensor(), h, options));
  try {
    const Split split = options.split_a ? make_split(space, *options.split_a)
                                        : decomposition_split(space, h);
    if (decomposition_arithmetic_holds(space, split, h)) return certify_decomposition_span(dec, options);
  } catch (const DomainError&) {
  }
  if (options.split_a || has_admissible_split(space, h)) return flattening();
  return timed([&] { return out_of_range(space, h, true); });
}

std::string to_string(Criterion c) {
  switch (c) {
    case Criterion::prop31: return "prop31";
    case Criterion::prop33: return "prop33";
    case Criterion::thm37: return "thm37";
  }
  return "?";
}

Criterion parse_criterion(const std::string& id) {
  if (id == "prop31") return Criterion::prop31;
  if (id == "prop33") return Criterion::prop33;
  if (id == "thm37") return Criterion::thm37;
  throw DomainError("unknown criterion '" + id + "'");
}

std::string criterion_title(Criterion c) {
  switch (c) {
    case Criterion::prop31: return "Proposition 3.1";
    case Criterion::prop33: return "Proposition 3.3";
    case Criterion::thm37: return "Theorem 3.7";
  }
  return "?";
}

std::string to_string(Verdict v) { return v == Verdict::certified ? "Certified" : "Inconclusive"; }

}  // namespace idcert
