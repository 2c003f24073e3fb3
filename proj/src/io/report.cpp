#include "idcert/io/report.hpp"

#include <iomanip>
#include <sstream>

#include "idcert/errors.hpp"
#include "json.hpp"

namespace idcert {

namespace {

using json = nlohmann::ordered_json;

std::string status_name(SchemeStatus s) {
  switch (s) {
    case SchemeStatus::empty: return "Empty";
    case SchemeStatus::zero_dimensional: return "ZeroDim";
    case SchemeStatus::positive_dimensional: return "PositiveDim";
    case SchemeStatus::inconclusive: return "Inconclusive";
  }
  return "Inconclusive";
}

SchemeStatus parse_status(const std::string& s) {
  if (s == "Empty") return SchemeStatus::empty;
  if (s == "ZeroDim") return SchemeStatus::zero_dimensional;
  if (s == "PositiveDim") return SchemeStatus::positive_dimensional;
  if (s == "Inconclusive") return SchemeStatus::inconclusive;
  throw ParseError(0, "unknown section status '" + s + "'");
}

json section_json(const SectionRecord& rec) {
  const SchemeReport& r = rec.report;
  json trace = json::array();
  for (const auto& [t, v] : r.trace) trace.push_back(json::array({t, v}));
  return json{{"check", rec.check},
              {"status", status_name(r.status)},
              {"length", r.length},
              {"dimension", r.dimension},
              {"method", r.method},
              {"generators", r.generator_count},
              {"basis_size", r.basis_size},
              {"stable_from", r.stable_from},
              {"note", r.note},
              {"trace", trace}};
}

SectionRecord section_from(const json& j) {
  SectionRecord rec;
  rec.check = j.at("check").get<std::string>();
  SchemeReport& r = rec.report;
  r.status = parse_status(j.at("status").get<std::string>());
  r.length = j.at("length").get<std::uint64_t>();
  r.dimension = j.at("dimension").get<int>();
  r.method = j.at("method").get<std::string>();
  r.generator_count = j.at("generators").get<std::size_t>();
  r.basis_size = j.at("basis_size").get<std::size_t>();
  r.stable_from = j.at("stable_from").get<unsigned>();
  r.note = j.at("note").get<std::string>();
  for (const auto& p : j.at("trace")) r.trace.emplace_back(p.at(0).get<unsigned>(), p.at(1).get<std::uint64_t>());
  return rec;
}

template <class T>
json optional_json(const std::optional<T>& v) {
  return v ? json(*v) : json(nullptr);
}

}  // namespace

std::string format_json(const Certificate& c) {
  json checks = json::array();
  for (const auto& ch : c.checks) {
    checks.push_back(
        json{{"name", ch.name}, {"computed", ch.computed}, {"required", ch.required}, {"passed", ch.passed}});
  }
  json sections = json::array();
  for (const auto& s : c.sections) sections.push_back(section_json(s));
  json j{
      {"schema_version", kReportSchemaVersion},
      {"criterion", c.criterion ? json(to_string(*c.criterion)) : json(nullptr)},
      {"criterion_title", c.criterion ? json(criterion_title(*c.criterion)) : json(nullptr)},
      {"input",
       json{{"kind", c.from_decomposition ? "decomposition" : "tensor"},
            {"sizes", c.sizes},
            {"degrees", c.degrees},
            {"h", c.h},
            {"split", c.split_a ? json{{"a", *c.split_a}, {"b", c.split_b.value_or(Multidegree{})}}
                                : json(nullptr)},
            {"quadruple", optional_json(c.quadruple)}}},
      {"verdict", to_string(c.verdict)},
      {"effective", c.effective},
      {"field", json{{"name", c.field}, {"probabilistic", c.probabilistic}}},
      {"seconds", c.seconds},
      {"reason", c.reason},
      {"checks", checks},
      {"log", c.log},
      {"sections", sections},
  };
  return j.dump(2) + "\n";
}

Certificate parse_json(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(e.byte, e.what());
  }
  try {
    if (j.at("schema_version").get<int>() != kReportSchemaVersion)
      throw ParseError(0, "unsupported schema_version " + j.at("schema_version").dump());
    Certificate c;
    if (!j.at("criterion").is_null()) c.criterion = parse_criterion(j.at("criterion").get<std::string>());
    const json& in = j.at("input");
    c.from_decomposition = in.at("kind").get<std::string>() == "decomposition";
    c.sizes = in.at("sizes").get<std::vector<unsigned>>();
    c.degrees = in.at("degrees").get<Multidegree>();
    c.h = in.at("h").get<std::size_t>();
    if (!in.at("split").is_null()) {
      c.split_a = in.at("split").at("a").get<Multidegree>();
      c.split_b = in.at("split").at("b").get<Multidegree>();
    }
    if (!in.at("quadruple").is_null()) c.quadruple = in.at("quadruple").get<std::array<unsigned, 4>>();
    const std::string verdict = j.at("verdict").get<std::string>();
    if (verdict != "Certified" && verdict != "Inconclusive") throw ParseError(0, "unknown verdict '" + verdict + "'");
    c.verdict = verdict == "Certified" ? Verdict::certified : Verdict::inconclusive;
    c.effective = j.at("effective").get<bool>();
    c.field = j.at("field").at("name").get<std::string>();
    c.probabilistic = j.at("field").at("probabilistic").get<bool>();
    c.seconds = j.at("seconds").get<double>();
    c.reason = j.at("reason").get<std::string>();
    for (const auto& ch : j.at("checks")) {
      c.checks.push_back({ch.at("name").get<std::string>(), ch.at("computed").get<std::string>(),
                          ch.at("required").get<std::string>(), ch.at("passed").get<bool>()});
    }
    c.log = j.at("log").get<std::vector<std::string>>();
    for (const auto& s : j.at("sections")) c.sections.push_back(section_from(s));
    return c;
  } catch (const json::exception& e) {
    throw ParseError(0, std::string("malformed report: ") + e.what());
  } catch (const DomainError& e) {
    throw ParseError(0, std::string("malformed report: ") + e.what());
  }
}

std::string format_text(const Certificate& c, const TextOptions& options) {
  std::ostringstream out;
  for (const auto& line : c.log) out << "-- " << line << "\n";
  out << "verdict: " << to_string(c.verdict) << "\n";
  if (c.criterion) {
    out << "criterion: " << criterion_title(*c.criterion) << " (" << to_string(*c.criterion) << ")\n";
  } else {
    out << "criterion: none\n";
  }
  out << "input: " << (c.from_decomposition ? "decomposition" : "tensor") << ", sizes "
      << format_multidegree(c.sizes) << ", degrees " << format_multidegree(c.degrees) << ", h = " << c.h
      << "\n";
  if (c.quadruple) {
    const auto& q = *c.quadruple;
    out << "quadruple (n, d, h, s): (" << q[0] << ", " << q[1] << ", " << q[2] << ", " << q[3] << ")\n";
  } else if (c.split_a) {
    out << "split: " << format_multidegree(*c.split_a) << " | " << format_multidegree(*c.split_b) << "\n";
  }
  out << "effective range: " << (c.effective ? "yes" : "no") << "\n";
  out << "field: " << c.field << (c.probabilistic ? " (probabilistic)" : " (exact)") << "\n";
  if (!c.reason.empty()) out << "reason: " << c.reason << "\n";
  out << "checks:\n";
  for (const auto& ch : c.checks) {
    out << "  " << (ch.passed ? "pass" : "FAIL") << "  " << ch.name << ": " << ch.computed
        << " (required " << ch.required << ")\n";
  }
  if (options.trace) {
    for (const auto& s : c.sections) {
      out << "hilbert profile (" << s.check << ", " << s.report.method << "):";
      for (const auto& [t, v] : s.report.trace) out << " " << t << ":" << v;
      out << "\n";
    }
  }
  out << "time: " << std::fixed << std::setprecision(3) << c.seconds << " s\n";
  return out.str();
}

}  // namespace idcert
