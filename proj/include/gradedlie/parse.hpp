#pragma once
// Line oriented text formats. An element is a semicolon separated list of
// terms, each an exact rational coefficient followed by a bracket word:
//   3/2 [x,[x,y]] ; -1 [y,[x,y]]
// A presentation file holds one directive per line: `generator <label>
// <weight>` or `relation <element>`; blank lines and lines starting with #
// are skipped. Errors carry 1-based line and column positions.

#include <cctype>
#include <memory>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "gradedlie/errors.hpp"
#include "gradedlie/lie_element.hpp"
#include "gradedlie/lyndon.hpp"
#include "gradedlie/presentation.hpp"

namespace gradedlie {

namespace detail {

class TextCursor {
 public:
  TextCursor(std::string text, int line) : text_(std::move(text)), line_(line) {}

  void skip_space() {
    while (pos_ < text_.size() && (text_[pos_] == ' ' || text_[pos_] == '\t')) ++pos_;
  }

  char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }

  bool consume(char c) {
    if (peek() != c) return false;
    ++pos_;
    return true;
  }

  bool at_end() {
    skip_space();
    return pos_ >= text_.size();
  }

  int line() const { return line_; }
  int column() const { return static_cast<int>(pos_) + 1; }
  void seek(std::size_t pos) { pos_ = pos; }

  [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, line_, column()); }

  std::string take_while(bool (*keep)(char)) {
    std::string out;
    while (pos_ < text_.size() && keep(text_[pos_])) out += text_[pos_++];
    return out;
  }

 private:
  std::string text_;
  std::size_t pos_ = 0;
  int line_;
};

inline bool is_digit_char(char c) { return std::isdigit(static_cast<unsigned char>(c)) != 0; }
inline bool is_label_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) != 0 || c == '_';
}

inline Scalar parse_rational(TextCursor& c) {
  c.skip_space();
  const bool negative = c.consume('-');
  const std::string digits = c.take_while(is_digit_char);
  if (digits.empty()) c.fail("expected a rational coefficient");
  Int num(digits);
  Int den(1);
  if (c.consume('/')) {
    const std::string below = c.take_while(is_digit_char);
    if (below.empty()) c.fail("expected a denominator");
    den = Int(below);
    if (den == 0) c.fail("zero denominator");
  }
  Scalar value(num, den);
  return negative ? Scalar(-value) : value;
}

inline LieElement parse_word(TextCursor& c, const std::shared_ptr<const FreeLieAlgebra>& alg) {
  c.skip_space();
  if (c.consume('[')) {
    const LieElement left = parse_word(c, alg);
    c.skip_space();
    if (!c.consume(',')) c.fail("expected ','");
    const LieElement right = parse_word(c, alg);
    c.skip_space();
    if (!c.consume(']')) c.fail("expected ']'");
    return bracket(left, right);
  }
  const int start = c.column();
  const char head = c.peek();
  if (!(std::isalpha(static_cast<unsigned char>(head)) || head == '_'))
    c.fail("expected a generator or '['");
  const std::string label = c.take_while(is_label_char);
  const GeneratorSpec& spec = alg->spec();
  for (std::size_t i = 0; i < spec.size(); ++i)
    if (spec.at(i).label == label)
      return LieElement::basis_element(alg, alg->find(Word{static_cast<Letter>(i)}));
  throw ParseError("unknown generator '" + label + "'", c.line(), start);
}

inline LieElement parse_element_at(TextCursor& c,
                                   const std::shared_ptr<const FreeLieAlgebra>& alg) {
  LieElement out = LieElement::zero(alg);
  do {
    const Scalar coeff = parse_rational(c);
    out += coeff * parse_word(c, alg);
    c.skip_space();
  } while (c.consume(';'));
  if (!c.at_end()) c.fail("unexpected trailing text");
  return out;
}

struct PendingLine {
  std::string text;
  std::size_t offset = 0;
  int line = 0;
};

inline std::vector<PendingLine> directive_lines(const std::string& text) {
  std::vector<PendingLine> out;
  std::size_t start = 0;
  int line_no = 1;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string::npos) end = text.size();
    out.push_back({text.substr(start, end - start), 0, line_no});
    if (end == text.size()) break;
    start = end + 1;
    ++line_no;
  }
  return out;
}

inline bool skippable(const std::string& line) {
  for (char c : line) {
    if (c == ' ' || c == '\t') continue;
    return c == '#';
  }
  return true;
}

}  // namespace detail

inline LieElement parse_element(const std::string& text,
                                const std::shared_ptr<const FreeLieAlgebra>& alg,
                                int line_no = 1) {
  detail::TextCursor c(text, line_no);
  return detail::parse_element_at(c, alg);
}

// One element per nonblank noncomment line.
inline std::vector<LieElement> parse_element_lines(
    const std::string& text, const std::shared_ptr<const FreeLieAlgebra>& alg) {
  std::vector<LieElement> out;
  for (const detail::PendingLine& line : detail::directive_lines(text)) {
    if (detail::skippable(line.text)) continue;
    out.push_back(parse_element(line.text, alg, line.line));
  }
  return out;
}

inline GradedLiePresentation parse_presentation(const std::string& text, int weight_bound) {
  std::vector<Generator> generators;
  std::set<std::string> labels;
  std::vector<detail::PendingLine> relations;

  for (const detail::PendingLine& line : detail::directive_lines(text)) {
    if (detail::skippable(line.text)) continue;
    detail::TextCursor c(line.text, line.line);
    c.skip_space();
    const int directive_col = c.column();
    const std::string directive = c.take_while(detail::is_label_char);
    if (directive == "generator") {
      c.skip_space();
      const int label_col = c.column();
      const std::string label = c.take_while(detail::is_label_char);
      if (!is_valid_label(label))
        throw ParseError("expected a generator label", line.line, label_col);
      if (!labels.insert(label).second)
        throw ParseError("duplicate generator '" + label + "'", line.line, label_col);
      c.skip_space();
      const int weight_col = c.column();
      const bool negative = c.consume('-');
      const std::string digits = c.take_while(detail::is_digit_char);
      if (digits.empty()) throw ParseError("expected an integer weight", line.line, c.column());
      if (digits.size() > 9) throw ParseError("weight out of range", line.line, weight_col);
      int weight = std::stoi(digits);
      if (negative) weight = -weight;
      if (weight == 0) throw ParseError("generator weight must be nonzero", line.line, weight_col);
      if (!generators.empty() && (weight > 0) != (generators.front().weight > 0))
        throw ParseError("generator weights must share one sign", line.line, weight_col);
      if (!c.at_end()) c.fail("unexpected trailing text");
      generators.push_back({label, weight});
      if (generators.size() > GeneratorSpec::kMaxGenerators)
        throw ParseError("too many generators", line.line, directive_col);
    } else if (directive == "relation") {
      detail::PendingLine pending = line;
      pending.offset = static_cast<std::size_t>(c.column()) - 1;
      relations.push_back(std::move(pending));
    } else {
      throw ParseError("unknown directive '" + directive + "'", line.line, directive_col);
    }
  }

  const auto alg = FreeLieAlgebra::make(GeneratorSpec(std::move(generators)));
  std::vector<LieElement> parsed;
  for (const detail::PendingLine& line : relations) {
    detail::TextCursor c(line.text, line.line);
    c.seek(line.offset);
    LieElement r = detail::parse_element_at(c, alg);
    if (r.is_zero() || !r.is_homogeneous())
      throw ParseError("relation is zero or not homogeneous", line.line, 1);
    if (r.terms().begin()->first.mag < 2 * alg->spec().min_magnitude())
      throw ParseError("relation is lighter than twice the lightest generator", line.line, 1);
    parsed.push_back(std::move(r));
  }
  return GradedLiePresentation(alg, std::move(parsed), weight_bound);
}

}  // namespace gradedlie
