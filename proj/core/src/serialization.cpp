#include "assocforge/serialization.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace assocforge {

namespace {

std::string format_body(const ChordSeries& s, const char* header, bool even) {
  if (s.strands() != 3)
    throw std::invalid_argument("file format carries 3-strand elements only");
  std::ostringstream out;
  out << header << "\n";
  out << "strands 3\n";
  out << "max_degree " << s.max_degree() << "\n";
  out << "parity " << (even ? "even" : "none") << "\n";
  // The term map is already ordered by degree then by letters, which is the
  // required text order for single-digit strand indices.
  for (const auto& [w, c] : s.terms())
    out << "term " << w.size() << " " << fraction_string(c) << " " << word_text(w)
        << "\n";
  return out.str();
}

}  // namespace

std::string format_associator(const AssociatorCandidate& phi) {
  return format_body(phi.phi, "assoc v1", phi.even);
}

std::string format_grt_element(const GrtElement& g) {
  return format_body(g.gamma, "grt v1", false);
}

ParsedElement parse_element(const std::string& text) {
  std::istringstream in(text);
  std::string line;

  auto next_line = [&]() {
    if (!std::getline(in, line)) throw std::invalid_argument("truncated element file");
    return line;
  };

  const std::string header = next_line();
  ParsedElement::Kind kind;
  if (header == "assoc v1")
    kind = ParsedElement::Kind::associator;
  else if (header == "grt v1")
    kind = ParsedElement::Kind::grt;
  else
    throw std::invalid_argument("unknown element file header: " + header);

  if (next_line() != "strands 3")
    throw std::invalid_argument("expected 'strands 3'");

  int max_degree = -1;
  {
    std::istringstream l(next_line());
    std::string key;
    if (!(l >> key >> max_degree) || key != "max_degree" || max_degree < 0)
      throw std::invalid_argument("expected 'max_degree <M>'");
  }

  bool even = false;
  {
    std::istringstream l(next_line());
    std::string key, value;
    if (!(l >> key >> value) || key != "parity" || (value != "even" && value != "none"))
      throw std::invalid_argument("expected 'parity <even|none>'");
    even = value == "even";
  }

  ChordSeries series(3, max_degree);
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::istringstream l(line);
    std::string key, coeff_text, mono_text;
    int degree = -1;
    if (!(l >> key >> degree >> coeff_text >> mono_text) || key != "term")
      throw std::invalid_argument("malformed term line: " + line);
    const Rational coeff = parse_fraction(coeff_text);
    const ChordWord word =
        mono_text == "-" ? ChordWord{} : parse_word_text(mono_text);
    if (static_cast<int>(word.size()) != degree)
      throw std::invalid_argument("term degree disagrees with its monomial: " + line);
    if (degree > max_degree)
      throw std::invalid_argument("term above the declared truncation: " + line);
    ChordMonomial m(3, word);
    if (!m.is_normal())
      throw std::invalid_argument("term monomial is not in normal form: " + line);
    if (coeff == 0) throw std::invalid_argument("zero coefficient term: " + line);
    if (series.coefficient(word) != 0)
      throw std::invalid_argument("duplicate term: " + line);
    series.add_normal(word, coeff);
  }

  return ParsedElement{kind, std::move(series), even};
}

ParsedElement read_element_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::invalid_argument("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_element(buf.str());
}

void write_file(const std::string& path, const std::string& bytes) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw std::invalid_argument("cannot write " + path);
  out << bytes;
  if (!out) throw std::runtime_error("short write to " + path);
}

}  // namespace assocforge
