#include "idcert/io/cli.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

#include "CLI11.hpp"
#include "idcert/errors.hpp"
#include "idcert/genrand.hpp"
#include "idcert/io/document.hpp"
#include "idcert/io/report.hpp"

namespace idcert::cli {

namespace {

/// "qq" -> nullopt, "fp" -> default prime, "fp:P" -> P.
std::optional<std::uint32_t> parse_field(const std::string& s) {
  if (s == "qq") return std::nullopt;
  if (s == "fp") return kDefaultPrime;
  if (s.rfind("fp:", 0) == 0) {
    const std::string digits = s.substr(3);
    if (digits.empty() || digits.size() > 10 || digits.find_first_not_of("0123456789") != std::string::npos)
      throw DomainError("malformed field '" + s + "'");
    const unsigned long long p = std::stoull(digits);
    if (p >= (1ULL << 31)) throw DomainError("field modulus must be below 2^31");
    PrimeField check(static_cast<std::uint32_t>(p));
    return static_cast<std::uint32_t>(p);
  }
  throw DomainError("unknown field '" + s + "' (expected qq, fp or fp:P)");
}

Multidegree parse_split(const std::string& s) {
  Multidegree a;
  std::stringstream in(s);
  std::string tok;
  while (std::getline(in, tok, ',')) {
    if (tok.empty() || tok.find_first_not_of("0123456789") != std::string::npos || tok.size() > 6)
      throw DomainError("malformed split '" + s + "'");
    a.push_back(static_cast<unsigned>(std::stoul(tok)));
  }
  if (a.empty()) throw DomainError("malformed split '" + s + "'");
  return a;
}

std::string read_input(const std::string& path, std::istream& in) {
  std::ostringstream buf;
  if (path == "-") {
    buf << in.rdbuf();
  } else {
    std::ifstream f(path);
    if (!f) throw Error("cannot open '" + path + "'");
    buf << f.rdbuf();
  }
  return buf.str();
}

struct CertifyArgs {
  std::vector<std::string> inputs;
  long h = 0;
  bool h_given = false;
  std::string criterion = "auto";
  std::string split;
  std::string field;
  std::string report = "text";
  long long budget = 0;
  bool trace = false;
  unsigned jobs = 1;
};

struct Outcome {
  int code = kExitError;
  std::string out;
  std::string err;
};

Outcome certify_one(const CertifyArgs& a, const std::string& text) {
  Outcome o;
  try {
    const InputDocument doc = parse_document(text);
    CertifyOptions opts;
    // field: flag, then document, then environment
    std::string field = a.field;
    if (field.empty() && doc.field) field = *doc.field;
    if (field.empty()) {
      if (const char* env = std::getenv("IDCERT_FIELD")) field = env;
    }
    if (!field.empty()) opts.prime = parse_field(field);
    long long budget = a.budget;
    if (budget == 0) {
      if (const char* env = std::getenv("IDCERT_BUDGET")) {
        const std::string s = env;
        if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos || s.size() > 18)
          throw DomainError("IDCERT_BUDGET must be a positive integer");
        budget = std::stoll(s);
      }
    }
    if (budget < 0) throw DomainError("--budget must be positive");
    if (budget > 0) opts.section.groebner.pair_budget = static_cast<std::size_t>(budget);
    if (!a.split.empty()) opts.split_a = parse_split(a.split);
    if (a.criterion == "prop31") opts.criterion = CriterionChoice::prop31;
    if (a.criterion == "prop33") opts.criterion = CriterionChoice::prop33;
    if (a.criterion == "thm37") opts.criterion = CriterionChoice::thm37;

    Certificate cert;
    if (const auto* dec = std::get_if<Decomposition>(&doc.payload)) {
      if (a.h_given && static_cast<std::size_t>(a.h) != dec->size())
        throw DomainError("--h " + std::to_string(a.h) + " differs from the " +
                          std::to_string(dec->size()) + " terms of the decomposition");
      if (doc.h && *doc.h != dec->size())
        throw DomainError("h " + std::to_string(*doc.h) + " differs from the " +
                          std::to_string(dec->size()) + " terms of the decomposition");
      cert = certify(*dec, opts);
    } else {
      std::size_t h = 0;
      if (a.h_given) h = static_cast<std::size_t>(a.h);
      else if (doc.h) h = *doc.h;
      else throw DomainError("no rank given: pass --h or an 'h' line");
      if (h < 1) throw DomainError("h must be positive");
      cert = certify(doc.space, std::get<MPoly<RationalField>>(doc.payload), h, opts);
    }
    o.out = a.report == "json" ? format_json(cert) : format_text(cert, {a.trace});
    o.code = cert.certified() ? kExitCertified : kExitInconclusive;
  } catch (const std::exception& e) {
    o.err = std::string("error: ") + e.what() + "\n";
    o.code = kExitError;
  }
  return o;
}

int run_certify(const CertifyArgs& a, std::istream& in, std::ostream& out, std::ostream& err) {
  if (a.h_given && a.h < 1) {
    err << "error: --h must be a positive integer\n";
    return kExitError;
  }
  if (a.jobs < 1) {
    err << "error: --jobs must be positive\n";
    return kExitError;
  }
  std::vector<std::string> inputs = a.inputs.empty() ? std::vector<std::string>{"-"} : a.inputs;
  if (std::count(inputs.begin(), inputs.end(), "-") > 1) {
    err << "error: standard input given more than once\n";
    return kExitError;
  }
  std::vector<std::string> texts(inputs.size());
  std::vector<Outcome> results(inputs.size());
  std::vector<bool> readable(inputs.size(), true);
  for (std::size_t i = 0; i < inputs.size(); ++i) {
    try {
      texts[i] = read_input(inputs[i], in);
    } catch (const std::exception& e) {
      results[i].err = std::string("error: ") + e.what() + "\n";
      readable[i] = false;
    }
  }
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i; (i = next.fetch_add(1)) < inputs.size();)
      if (readable[i]) results[i] = certify_one(a, texts[i]);
  };
  const unsigned threads = std::min<std::size_t>(a.jobs, inputs.size());
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < threads; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();

  int code = kExitCertified;
  for (std::size_t i = 0; i < inputs.size(); ++i) {
    if (inputs.size() > 1 && a.report == "text") out << "== " << inputs[i] << "\n";
    out << results[i].out;
    err << results[i].err;
    if (results[i].code == kExitError) code = kExitError;
    else if (results[i].code == kExitInconclusive && code != kExitError) code = kExitInconclusive;
  }
  return code;
}

struct RandomArgs {
  std::vector<unsigned> sizes;
  std::vector<unsigned> degrees;
  long h = 0;
  std::uint64_t seed = 0;
  long bound = 1L << 15;
  std::string emit = "tensor";
};

int run_random(const RandomArgs& a, std::ostream& out) {
  if (a.h < 1) throw DomainError("--h must be a positive integer");
  if (a.sizes.size() != a.degrees.size()) throw DomainError("--sizes and --degrees differ in length");
  const TensorSpace space(a.sizes, a.degrees);
  const RandomConfig cfg{a.seed, a.bound};
  InputDocument doc;
  doc.space = space;
  doc.h = static_cast<std::size_t>(a.h);
  doc.seed = a.seed;
  if (a.emit == "dense") {
    doc.payload = random_dense_form(space, cfg);
  } else {
    RandomTensor rt = random_tensor(space, static_cast<std::size_t>(a.h), cfg);
    if (a.emit == "decomposition") doc.payload = std::move(rt.decomposition);
    else doc.payload = std::move(rt.tensor);
  }
  out << format_document(doc);
  return kExitCertified;
}

struct BoundsArgs {
  std::string family;
  std::vector<unsigned> params;
  std::vector<unsigned> sizes;
  std::vector<unsigned> degrees;
  std::string split;
  long h = 0;
};

int run_bounds(const BoundsArgs& a, std::ostream& out) {
  if (a.h < 1) throw DomainError("--h must be a positive integer");
  const auto h = static_cast<std::size_t>(a.h);
  if (!a.family.empty()) {
    const BoundFamily family = parse_bound_family(a.family);
    const FamilyBound b = family_bound(family, a.params, h);
    out << "family: " << to_string(family) << "\n";
    out << "params: " << format_multidegree(a.params) << "\n";
    out << "bound: h < " << b.bound.get_str() << "\n";
    out << "h = " << h << ": " << (b.holds ? "effective" : "not effective") << "\n";
    return b.holds ? kExitCertified : kExitInconclusive;
  }
  if (a.sizes.empty() || a.degrees.empty())
    throw DomainError("bounds needs --family or --sizes and --degrees");
  const TensorSpace space(a.sizes, a.degrees);
  const Split split = a.split.empty() ? default_split(space, h) : make_split(space, parse_split(a.split));
  const bool holds = effective_range(space, split, h);
  out << "split: " << format_multidegree(split.a) << " | " << format_multidegree(split.b) << "\n";
  out << "dim V_B = " << split.dim_b << ", h + dim = " << h + variety_dimension(space, split.b) << "\n";
  out << "h = " << h << ": " << (holds ? "effective" : "not effective") << "\n";
  return holds ? kExitCertified : kExitInconclusive;
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Certifies identifiability of symmetric and mixed symmetric tensors", "idcert"};
  app.set_help_flag("--help", "print this help");
  app.require_subcommand(1);

  CertifyArgs ca;
  auto* certify_cmd = app.add_subcommand("certify", "certify an input document");
  certify_cmd->add_option("inputs", ca.inputs, "input files ('-' for standard input)");
  certify_cmd->add_option("--input,-i", ca.inputs, "input file");
  auto* h_opt = certify_cmd->add_option("--h", ca.h, "rank to certify");
  certify_cmd->add_option("--criterion", ca.criterion, "auto, prop31, prop33 or thm37")
      ->check(CLI::IsMember({"auto", "prop31", "prop33", "thm37"}));
  certify_cmd->add_option("--split", ca.split, "flattening split a_1,..,a_p");
  certify_cmd->add_option("--field", ca.field, "qq (exact) or fp[:P] (modulo a prime)");
  certify_cmd->add_option("--report", ca.report, "text or json")->check(CLI::IsMember({"text", "json"}));
  certify_cmd->add_option("--budget", ca.budget, "Groebner pair budget");
  certify_cmd->add_flag("--trace", ca.trace, "print the Hilbert profiles");
  certify_cmd->add_option("--jobs,-j", ca.jobs, "inputs certified in parallel");

  RandomArgs ra;
  auto* random_cmd = app.add_subcommand("random", "emit a random rank-h input document");
  random_cmd->add_option("--sizes", ra.sizes, "variables per group")->required()->delimiter(',');
  random_cmd->add_option("--degrees", ra.degrees, "degree per group")->required()->delimiter(',');
  random_cmd->add_option("--h", ra.h, "number of rank-one terms")->required();
  random_cmd->add_option("--seed", ra.seed, "generator seed");
  random_cmd->add_option("--bound", ra.bound, "coefficients lie in [-bound, bound]");
  random_cmd->add_option("--emit", ra.emit, "tensor, decomposition or dense")
      ->check(CLI::IsMember({"tensor", "decomposition", "dense"}));

  BoundsArgs ba;
  auto* bounds_cmd = app.add_subcommand("bounds", "evaluate effectiveness bounds");
  bounds_cmd->add_option("--family", ba.family, "mixed-symmetric, skew, segre or unbalanced-segre");
  bounds_cmd->add_option("params", ba.params, "family parameters");
  bounds_cmd->add_option("--sizes", ba.sizes, "variables per group")->delimiter(',');
  bounds_cmd->add_option("--degrees", ba.degrees, "degree per group")->delimiter(',');
  bounds_cmd->add_option("--split", ba.split, "flattening split a_1,..,a_p");
  bounds_cmd->add_option("--h", ba.h, "rank")->required();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitCertified : kExitError;
  }
  try {
    if (certify_cmd->parsed()) {
      ca.h_given = h_opt->count() > 0;
      return run_certify(ca, in, out, err);
    }
    if (random_cmd->parsed()) return run_random(ra, out);
    return run_bounds(ba, out);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitError;
  }
}

}  // namespace idcert::cli
