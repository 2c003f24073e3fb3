#include <gtest/gtest.h>

#include "json.hpp"

#include "idcert/errors.hpp"
#include "idcert/genrand.hpp"
#include "idcert/io/report.hpp"

using namespace idcert;

namespace {

std::vector<Certificate> samples() {
  std::vector<Certificate> out;
  const TensorSpace q({3}, {5});
  const auto t = random_tensor(q, 7, {1, 1L << 15});
  out.push_back(certify(q, t.tensor, 7));
  Decomposition six{q, {t.decomposition.terms.begin(), t.decomposition.terms.begin() + 6}};
  out.push_back(certify(six));
  out.push_back(certify(random_tensor(TensorSpace({4}, {4}), 7, {2, 1L << 15}).decomposition));
  const TensorSpace quartic({3}, {4});
  out.push_back(certify(quartic, random_tensor(quartic, 5, {1, 1L << 15}).tensor, 5));
  const TensorSpace bin({2}, {3});
  out.push_back(certify(bin, random_tensor(bin, 2, {1, 1L << 15}).tensor, 5));
  CertifyOptions o;
  o.prime = kDefaultPrime;
  const TensorSpace mixed({2, 3}, {3, 2});
  out.push_back(certify(mixed, random_tensor(mixed, 3, {3, 1L << 15}).tensor, 3, o));
  return out;
}

}  // namespace

TEST(Report, JsonRoundTripIsExact) {
  for (const auto& c : samples()) {
    const std::string s = format_json(c);
    const Certificate back = parse_json(s);
    EXPECT_EQ(back, c);
    EXPECT_EQ(format_json(back), s);
  }
}

TEST(Report, JsonShape) {
  const auto all = samples();
  const auto j = nlohmann::json::parse(format_json(all[0]));
  EXPECT_EQ(j["schema_version"], kReportSchemaVersion);
  EXPECT_EQ(j["criterion"], "thm37");
  EXPECT_EQ(j["criterion_title"], "Theorem 3.7");
  EXPECT_EQ(j["verdict"], "Certified");
  EXPECT_EQ(j["input"]["quadruple"], nlohmann::json::array({2, 5, 7, 2}));
  EXPECT_EQ(j["field"]["probabilistic"], false);
  const auto out = nlohmann::json::parse(format_json(all[4]));
  EXPECT_TRUE(out["criterion"].is_null());
  EXPECT_EQ(out["verdict"], "Inconclusive");
  EXPECT_EQ(out["reason"], "out of criteria range");
  EXPECT_EQ(nlohmann::json::parse(format_json(all[5]))["field"]["probabilistic"], true);
}

TEST(Report, RejectsMalformedJson) {
  EXPECT_THROW(parse_json("{"), ParseError);
  EXPECT_THROW(parse_json("[]"), ParseError);
  auto j = nlohmann::json::parse(format_json(samples()[0]));
  j["schema_version"] = 99;
  EXPECT_THROW(parse_json(j.dump()), ParseError);
  j = nlohmann::json::parse(format_json(samples()[0]));
  j.erase("checks");
  EXPECT_THROW(parse_json(j.dump()), ParseError);
  j = nlohmann::json::parse(format_json(samples()[0]));
  j["verdict"] = "Maybe";
  EXPECT_THROW(parse_json(j.dump()), ParseError);
}

TEST(Report, TextMentionsVerdictAndChecks) {
  const auto all = samples();
  const std::string t = format_text(all[0]);
  EXPECT_NE(t.find("-- applying Theorem 3.7"), std::string::npos);
  EXPECT_NE(t.find("Certified"), std::string::npos);
  EXPECT_NE(t.find("catalecticant_rank"), std::string::npos);
  const std::string in = format_text(all[3]);
  EXPECT_NE(in.find("Inconclusive"), std::string::npos);
  EXPECT_NE(in.find("FAIL"), std::string::npos);
  EXPECT_NE(format_text(all[1], {true}).find("hilbert"), std::string::npos);
}
