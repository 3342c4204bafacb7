#ifndef SDG_DSL_HPP
#define SDG_DSL_HPP

#include <string>
#include <utility>
#include <vector>

#include "sdg/model.hpp"

namespace sdg {

// .sdg scenario files: line-oriented, '#' starts a comment, blank lines
// ignored. Directives:
//   scenario <name>
//   params <label>...
//   outcomes <label>...
//   row <outcome-label> <rational>...     one per declared outcome
//   gameoff <outcome-label>...            optional
//   reveal <outcome-label> <param-label>  optional
// Rationals are "a/b", plain integers, or decimals (converted exactly).

enum class ParseErrorKind {
  Lexical,        // bad token, unknown directive, malformed rational
  Structure,      // missing or repeated section
  DuplicateLabel, // label or row declared twice
  UnknownOutcome, // row/gameoff/reveal names an undeclared outcome
  MissingRow,     // declared outcome has no row
  ArityMismatch,  // row entry count differs from the parameter count
};

std::string to_string(ParseErrorKind kind);

class ParseError : public std::runtime_error {
 public:
  ParseError(ParseErrorKind kind, int line, int column, const std::string& message);

  ParseErrorKind kind() const { return kind_; }
  int line() const { return line_; }    // 1-based
  int column() const { return column_; }  // 1-based

 private:
  ParseErrorKind kind_;
  int line_;
  int column_;
};

/// A token with its source position.
struct Located {
  std::string text;
  int line = 0;
  int column = 0;

  bool operator==(const Located&) const = default;
};

struct RowDoc {
  Located outcome;
  std::vector<Located> entry_tokens;
  std::vector<Rational> values;
};

/// Parsed form of a .sdg document, positions preserved for diagnostics.
struct ScenarioDoc {
  Located name;
  std::vector<Located> params;
  std::vector<Located> outcomes;
  std::vector<RowDoc> rows;  // one per declared outcome, in declared order
  std::vector<Located> game_off;
  std::vector<std::pair<Located, Located>> reveals;  // (outcome, param)
};

/// Parses a full document or throws ParseError at the first problem.
ScenarioDoc parse(const std::string& text);

/// Builds and validates the model; range and column-sum violations come
/// back as ValidationError naming the offending entry or parameter.
DiscreteModel compile(const ScenarioDoc& doc);

/// Canonical text form: lowest-terms rationals, declared order.
/// compile(parse(render(m))) == m for every valid model.
std::string render(const DiscreteModel& model);

}  // namespace sdg

#endif  // SDG_DSL_HPP
