#include "polarbox/rep_io.hpp"

#include <sstream>

#include "polarbox/errors.hpp"

namespace polarbox {
namespace {

std::vector<std::string> tokenize(const std::string& line) {
  std::vector<std::string> out;
  std::istringstream is(line);
  std::string tok;
  while (is >> tok) out.push_back(tok);
  return out;
}

bool blank(const std::string& line) { return tokenize(line).empty(); }

Rational parse_number(const std::string& tok) {
  try {
    return Rational::from_string(tok);
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what());
  }
}

long parse_count(const std::string& tok, const char* what) {
  try {
    size_t pos = 0;
    long v = std::stol(tok, &pos);
    if (pos != tok.size()) throw std::invalid_argument(tok);
    return v;
  } catch (const std::exception&) {
    throw ParseError(std::string("malformed ") + what + ": '" + tok + "'");
  }
}

}  // namespace

Rep parse_rep(std::string_view text, std::vector<std::string>* warnings) {
  std::istringstream in{std::string(text)};
  std::string line;
  std::vector<std::string> lines;
  while (std::getline(in, line)) lines.push_back(line);

  size_t pos = 0;
  auto next_content = [&]() -> const std::string* {
    while (pos < lines.size() && blank(lines[pos])) ++pos;
    return pos < lines.size() ? &lines[pos] : nullptr;
  };

  // optional name line, then the kind line
  std::string name;
  bool is_h = false;
  {
    const std::string* l = next_content();
    if (!l) throw ParseError("empty file");
    auto kind_of = [](const std::string& s) -> int {
      auto toks = tokenize(s);
      if (toks.size() != 1) return -1;
      if (toks[0] == "H-representation") return 1;
      if (toks[0] == "V-representation") return 0;
      return -1;
    };
    int k = kind_of(*l);
    if (k < 0) {
      auto toks = tokenize(*l);
      name = toks.empty() ? "" : *l;
      ++pos;
      l = next_content();
      if (!l) throw ParseError("missing H-representation/V-representation line");
      k = kind_of(*l);
      if (k < 0) throw ParseError("malformed header: expected H-representation or V-representation");
    }
    is_h = k == 1;
    ++pos;
  }

  // optional linearity line(s) before `begin`
  std::set<size_t> linearity;  // 0-based
  bool have_linearity = false;
  const std::string* l = next_content();
  if (!l) throw ParseError("missing begin");
  {
    auto toks = tokenize(*l);
    if (!toks.empty() && toks[0] == "linearity") {
      if (!is_h) throw ParseError("linearity in a V-file: the input would not be pointed");
      have_linearity = true;
      if (toks.size() < 2) throw ParseError("malformed linearity line");
      long k = parse_count(toks[1], "linearity count");
      if (k < 0 || static_cast<size_t>(k) + 2 != toks.size())
        throw ParseError("malformed linearity line: count does not match indices");
      for (size_t i = 2; i < toks.size(); ++i) {
        long idx = parse_count(toks[i], "linearity index");
        if (idx < 1) throw ParseError("linearity index must be 1-based and positive");
        linearity.insert(static_cast<size_t>(idx - 1));
      }
      ++pos;
      l = next_content();
      if (!l) throw ParseError("missing begin");
    }
  }

  if (tokenize(*l) != std::vector<std::string>{"begin"}) throw ParseError("missing begin");
  ++pos;

  l = next_content();
  if (!l) throw ParseError("missing size line");
  auto size_toks = tokenize(*l);
  if (size_toks.size() != 3) throw ParseError("malformed size line: expected 'm d rational'");
  long m = parse_count(size_toks[0], "row count");
  long d = parse_count(size_toks[1], "column count");
  if (size_toks[2] != "rational" && size_toks[2] != "integer")
    throw ParseError("malformed size line: number type must be 'rational' or 'integer'");
  if (m < 0) throw ParseError("negative row count");
  if (d < 2) throw ParseError("column count must be at least 2 (one coordinate)");
  ++pos;

  RMatrix rows(0, static_cast<size_t>(d));
  while (rows.rows() < static_cast<size_t>(m)) {
    l = next_content();
    if (!l) throw ParseError("wrong row count: file ends after " + std::to_string(rows.rows()) +
                             " of " + std::to_string(m) + " rows");
    auto toks = tokenize(*l);
    if (toks == std::vector<std::string>{"end"})
      throw ParseError("wrong row count: 'end' after " + std::to_string(rows.rows()) + " of " +
                       std::to_string(m) + " rows");
    if (toks.size() != static_cast<size_t>(d))
      throw ParseError("row " + std::to_string(rows.rows() + 1) + " has " +
                       std::to_string(toks.size()) + " entries, expected " + std::to_string(d));
    RVector row(static_cast<size_t>(d));
    for (size_t j = 0; j < row.size(); ++j) row[j] = parse_number(toks[j]);
    rows.append_row(row);
    ++pos;
  }

  l = next_content();
  if (!l || tokenize(*l) != std::vector<std::string>{"end"}) throw ParseError("missing end");
  ++pos;

  for (; pos < lines.size(); ++pos) {
    if (!blank(lines[pos])) {
      if (warnings)
        warnings->push_back("ignoring content after end: '" + lines[pos] + "'");
    }
  }

  const size_t n = static_cast<size_t>(d) - 1;
  if (is_h) {
    for (size_t i : linearity)
      if (i >= rows.rows()) throw ParseError("linearity index out of range");
    HRep h;
    h.n = n;
    h.rows = std::move(rows);
    h.equality_marks = std::move(linearity);
    h.name = name;
    try {
      validate(h);
    } catch (const Error& e) {
      throw ParseError(e.what());
    }
    return h;
  }

  (void)have_linearity;
  VRep v;
  v.n = n;
  v.rows = RMatrix(0, n + 1);
  for (size_t i = 0; i < rows.rows(); ++i) {
    RVector row = rows.row_copy(i);
    const Rational lead = row[0];
    if (lead.sign() < 0)
      throw ParseError("V-file row " + std::to_string(i + 1) +
                       ": leading entry cannot be scaled to 0 or 1");
    if (lead.sign() > 0 && lead != Rational(1))
      for (Rational& x : row) x /= lead;  // positive scaling normalizes vertices
    v.rows.append_row(row);
  }
  v.name = name;
  try {
    validate(v);
  } catch (const Error& e) {
    throw ParseError(e.what());
  }
  return v;
}

namespace {

void emit_matrix(std::ostringstream& os, const std::string& name, const char* kind,
                 const std::set<size_t>& marks, const RMatrix& rows) {
  if (!name.empty()) os << name << "\n";
  os << kind << "\n";
  if (!marks.empty()) {
    os << "linearity " << marks.size();
    for (size_t i : marks) os << " " << (i + 1);
    os << "\n";
  }
  os << "begin\n";
  os << rows.rows() << " " << rows.cols() << " rational\n";
  for (size_t i = 0; i < rows.rows(); ++i) {
    for (size_t j = 0; j < rows.cols(); ++j) {
      if (j) os << " ";
      os << rows.at(i, j).str();
    }
    os << "\n";
  }
  os << "end\n";
}

}  // namespace

std::string emit_rep(const HRep& h) {
  validate(h);
  std::ostringstream os;
  emit_matrix(os, h.name, "H-representation", h.equality_marks, h.rows);
  return os.str();
}

std::string emit_rep(const VRep& v) {
  validate(v);
  std::ostringstream os;
  emit_matrix(os, v.name, "V-representation", {}, v.rows);
  return os.str();
}

std::string emit_rep(const Rep& r) {
  if (std::holds_alternative<HRep>(r)) return emit_rep(std::get<HRep>(r));
  return emit_rep(std::get<VRep>(r));
}

}  // namespace polarbox
