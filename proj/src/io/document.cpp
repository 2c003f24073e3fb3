#include "idcert/io/document.hpp"

#include <sstream>

#include "idcert/errors.hpp"
#include "idcert/io/parse.hpp"

namespace idcert {

namespace {

struct Line {
  std::size_t offset;
  std::string_view text;
};

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

std::vector<Line> split_lines(std::string_view text) {
  std::vector<Line> lines;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(start, end - start);
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    const std::size_t lead = line.find_first_not_of(" \t\r");
    line = trim(line);
    if (!line.empty()) lines.push_back({start + lead, line});
    start = end + 1;
  }
  return lines;
}

std::pair<std::string_view, std::string_view> keyword(std::string_view line) {
  const std::size_t sp = line.find_first_of(" \t");
  if (sp == std::string_view::npos) return {line, {}};
  return {line.substr(0, sp), trim(line.substr(sp))};
}

std::vector<unsigned> unsigned_list(const Line& line, std::string_view rest) {
  std::vector<unsigned> out;
  std::string s(rest);
  for (char& c : s)
    if (c == ',') c = ' ';
  std::istringstream in(s);
  std::string tok;
  while (in >> tok) {
    if (tok.find_first_not_of("0123456789") != std::string::npos || tok.size() > 6)
      throw ParseError(line.offset, "expected non-negative integers, got '" + tok + "'");
    out.push_back(static_cast<unsigned>(std::stoul(tok)));
  }
  if (out.empty()) throw ParseError(line.offset, "expected a list of integers");
  return out;
}

std::uint64_t single_integer(const Line& line, std::string_view rest) {
  const std::string s(rest);
  if (s.empty() || s.size() > 19 || s.find_first_not_of("0123456789") != std::string::npos)
    throw ParseError(line.offset, "expected a non-negative integer, got '" + s + "'");
  return std::stoull(s);
}

RankOneTerm parse_term(const Line& line, const TensorSpace& space) {
  RankOneTerm term;
  std::string_view body = line.text;
  if (auto colon = body.find(':'); colon != std::string_view::npos) {
    term.lambda = parse_rational(body.substr(0, colon));
    body = body.substr(colon + 1);
  }
  std::size_t start = 0;
  while (true) {
    const std::size_t bar = body.find('|', start);
    const std::string_view group = body.substr(start, bar == std::string_view::npos ? bar : bar - start);
    std::vector<mpq_class> form;
    std::size_t s = 0;
    while (true) {
      const std::size_t comma = group.find(',', s);
      const std::string_view tok = group.substr(s, comma == std::string_view::npos ? comma : comma - s);
      try {
        form.push_back(parse_rational(tok));
      } catch (const ParseError& e) {
        throw ParseError(line.offset, std::string("bad coefficient in decomposition term: ") + e.what());
      }
      if (comma == std::string_view::npos) break;
      s = comma + 1;
    }
    term.forms.push_back(std::move(form));
    if (bar == std::string_view::npos) break;
    start = bar + 1;
  }
  if (term.forms.size() != space.factor_count()) {
    throw ParseError(line.offset, "decomposition term has " + std::to_string(term.forms.size()) +
                                      " groups, expected " + std::to_string(space.factor_count()));
  }
  return term;
}

}  // namespace

InputDocument parse_document(std::string_view text) {
  const std::vector<Line> lines = split_lines(text);
  std::optional<std::vector<unsigned>> sizes;
  std::optional<Multidegree> degrees;
  InputDocument doc;
  std::optional<Line> poly_line;
  std::string poly_text;
  std::vector<Line> term_lines;
  bool in_decomposition = false;
  bool has_decomposition = false;
  bool in_polynomial = false;

  for (const Line& line : lines) {
    auto [key, rest] = keyword(line.text);
    const bool is_key = key == "sizes" || key == "degrees" || key == "h" || key == "field" ||
                        key == "seed" || key == "polynomial" || key == "decomposition";
    if (!is_key) {
      if (in_decomposition) {
        term_lines.push_back(line);
      } else if (in_polynomial) {
        poly_text += ' ';
        poly_text += line.text;
      } else {
        throw ParseError(line.offset, "unknown directive '" + std::string(key) + "'");
      }
      continue;
    }
    in_polynomial = false;
    in_decomposition = false;
    if ((key == "polynomial" || key == "decomposition") && (poly_line || has_decomposition))
      throw ParseError(line.offset, "more than one payload");
    if (key == "sizes") {
      sizes = unsigned_list(line, rest);
    } else if (key == "degrees") {
      degrees = unsigned_list(line, rest);
    } else if (key == "h") {
      doc.h = single_integer(line, rest);
    } else if (key == "field") {
      doc.field = std::string(rest);
    } else if (key == "seed") {
      doc.seed = single_integer(line, rest);
    } else if (key == "polynomial") {
      poly_line = line;
      poly_text = std::string(rest);
      in_polynomial = true;
    } else {
      if (!rest.empty()) throw ParseError(line.offset, "'decomposition' takes no arguments");
      in_decomposition = true;
      has_decomposition = true;
    }
  }
  if (!sizes) throw ParseError(0, "missing 'sizes' line");
  if (!degrees) throw ParseError(0, "missing 'degrees' line");
  if (sizes->size() != degrees->size())
    throw ParseError(0, "'sizes' and 'degrees' have different lengths");
  doc.space = TensorSpace(*sizes, *degrees);
  if (poly_line) {
    try {
      doc.payload = parse_polynomial(poly_text, doc.space);
    } catch (const ParseError& e) {
      // offsets inside continuation lines are approximate
      throw ParseError(poly_line->offset + std::string("polynomial ").size() + e.position(),
                       std::string(e.what()).substr(std::string(e.what()).find(": ") + 2));
    }
  } else if (has_decomposition) {
    Decomposition dec{doc.space, {}};
    for (const Line& l : term_lines) dec.terms.push_back(parse_term(l, doc.space));
    validate(dec);
    doc.payload = std::move(dec);
  } else {
    throw ParseError(text.size(), "missing 'polynomial' or 'decomposition' payload");
  }
  return doc;
}

std::string format_document(const InputDocument& doc) {
  std::ostringstream out;
  auto list = [&](const std::vector<unsigned>& v) {
    for (std::size_t i = 0; i < v.size(); ++i) out << (i ? " " : "") << v[i];
    out << "\n";
  };
  out << "sizes ";
  list(doc.space.group_sizes());
  out << "degrees ";
  list(doc.space.degrees());
  if (doc.h) out << "h " << *doc.h << "\n";
  if (doc.field) out << "field " << *doc.field << "\n";
  if (doc.seed) out << "seed " << *doc.seed << "\n";
  if (const auto* p = std::get_if<MPoly<RationalField>>(&doc.payload)) {
    out << "polynomial " << format_poly(*p, doc.space) << "\n";
  } else {
    out << "decomposition\n";
    for (const auto& term : std::get<Decomposition>(doc.payload).terms) {
      if (term.lambda != 1) out << term.lambda.get_str() << " : ";
      for (std::size_t g = 0; g < term.forms.size(); ++g) {
        if (g) out << " | ";
        for (std::size_t j = 0; j < term.forms[g].size(); ++j)
          out << (j ? "," : "") << term.forms[g][j].get_str();
      }
      out << "\n";
    }
  }
  return out.str();
}

}  // namespace idcert
