#include "sdg/dsl.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace sdg {

std::string to_string(ParseErrorKind kind) {
  switch (kind) {
    case ParseErrorKind::Lexical: return "lexical";
    case ParseErrorKind::Structure: return "structure";
    case ParseErrorKind::DuplicateLabel: return "duplicate-label";
    case ParseErrorKind::UnknownOutcome: return "unknown-outcome";
    case ParseErrorKind::MissingRow: return "missing-row";
    case ParseErrorKind::ArityMismatch: return "arity-mismatch";
  }
  return "?";
}

ParseError::ParseError(ParseErrorKind kind, int line, int column, const std::string& message)
    : std::runtime_error(std::to_string(line) + ":" + std::to_string(column) + ": " +
                         to_string(kind) + " error: " + message),
      kind_(kind),
      line_(line),
      column_(column) {}

namespace {

std::vector<Located> tokenize_line(const std::string& line, int line_no) {
  std::vector<Located> tokens;
  std::size_t i = 0;
  while (i < line.size()) {
    if (line[i] == '#') break;
    if (std::isspace(static_cast<unsigned char>(line[i]))) {
      ++i;
      continue;
    }
    std::size_t start = i;
    while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i])) &&
           line[i] != '#') {
      ++i;
    }
    tokens.push_back({line.substr(start, i - start), line_no, static_cast<int>(start) + 1});
  }
  return tokens;
}

[[noreturn]] void fail(ParseErrorKind kind, const Located& at, const std::string& message) {
  throw ParseError(kind, at.line, at.column, message);
}

void check_unique(const std::vector<Located>& labels) {
  for (std::size_t i = 0; i < labels.size(); ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      if (labels[i].text == labels[j].text) {
        fail(ParseErrorKind::DuplicateLabel, labels[i],
             "label '" + labels[i].text + "' declared twice");
      }
    }
  }
}

const Located* find_label(const std::vector<Located>& labels, const std::string& text) {
  auto it = std::find_if(labels.begin(), labels.end(),
                         [&](const Located& l) { return l.text == text; });
  return it == labels.end() ? nullptr : &*it;
}

Rational parse_rational_token(const Located& tok) {
  try {
    return Rational::parse(tok.text);
  } catch (const std::invalid_argument&) {
    fail(ParseErrorKind::Lexical, tok, "malformed rational '" + tok.text + "'");
  }
}

}  // namespace

ScenarioDoc parse(const std::string& text) {
  ScenarioDoc doc;
  bool saw_scenario = false, saw_params = false, saw_outcomes = false;

  std::istringstream in(text);
  std::string line;
  int line_no = 0;
  int last_line = 1;
  while (std::getline(in, line)) {
    ++line_no;
    auto tokens = tokenize_line(line, line_no);
    if (tokens.empty()) continue;
    last_line = line_no;
    const Located& directive = tokens[0];
    auto args = std::vector<Located>(tokens.begin() + 1, tokens.end());

    if (directive.text == "scenario") {
      if (saw_scenario) fail(ParseErrorKind::Structure, directive, "repeated 'scenario' line");
      if (args.size() != 1) {
        fail(ParseErrorKind::Structure, directive, "'scenario' takes exactly one name");
      }
      doc.name = args[0];
      saw_scenario = true;
    } else if (directive.text == "params") {
      if (saw_params) fail(ParseErrorKind::Structure, directive, "repeated 'params' line");
      if (args.empty()) fail(ParseErrorKind::Structure, directive, "'params' needs labels");
      doc.params = args;
      check_unique(doc.params);
      saw_params = true;
    } else if (directive.text == "outcomes") {
      if (saw_outcomes) fail(ParseErrorKind::Structure, directive, "repeated 'outcomes' line");
      if (args.empty()) fail(ParseErrorKind::Structure, directive, "'outcomes' needs labels");
      doc.outcomes = args;
      check_unique(doc.outcomes);
      saw_outcomes = true;
    } else if (directive.text == "row") {
      if (args.empty()) fail(ParseErrorKind::Structure, directive, "'row' needs an outcome label");
      RowDoc row;
      row.outcome = args[0];
      row.entry_tokens.assign(args.begin() + 1, args.end());
      for (const Located& tok : row.entry_tokens) {
        row.values.push_back(parse_rational_token(tok));
      }
      doc.rows.push_back(std::move(row));
    } else if (directive.text == "gameoff") {
      if (args.empty()) fail(ParseErrorKind::Structure, directive, "'gameoff' needs labels");
      doc.game_off.insert(doc.game_off.end(), args.begin(), args.end());
    } else if (directive.text == "reveal") {
      if (args.size() != 2) {
        fail(ParseErrorKind::Structure, directive, "'reveal' takes an outcome and a parameter");
      }
      doc.reveals.emplace_back(args[0], args[1]);
    } else {
      fail(ParseErrorKind::Lexical, directive, "unknown directive '" + directive.text + "'");
    }
  }

  Located eof{"", std::max(last_line, 1), 1};
  if (!saw_scenario) fail(ParseErrorKind::Structure, eof, "missing 'scenario' line");
  if (!saw_params) fail(ParseErrorKind::Structure, eof, "missing 'params' line");
  if (!saw_outcomes) fail(ParseErrorKind::Structure, eof, "missing 'outcomes' line");

  // Cross checks against the declared label lists.
  for (const RowDoc& row : doc.rows) {
    if (!find_label(doc.outcomes, row.outcome.text)) {
      fail(ParseErrorKind::UnknownOutcome, row.outcome,
           "row for undeclared outcome '" + row.outcome.text + "'");
    }
    if (row.values.size() != doc.params.size()) {
      fail(ParseErrorKind::ArityMismatch, row.outcome,
           "row '" + row.outcome.text + "' has " + std::to_string(row.values.size()) +
               " entries, expected " + std::to_string(doc.params.size()));
    }
  }
  for (std::size_t i = 0; i < doc.rows.size(); ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      if (doc.rows[i].outcome.text == doc.rows[j].outcome.text) {
        fail(ParseErrorKind::DuplicateLabel, doc.rows[i].outcome,
             "second row for outcome '" + doc.rows[i].outcome.text + "'");
      }
    }
  }
  for (const Located& declared : doc.outcomes) {
    bool found = std::any_of(doc.rows.begin(), doc.rows.end(), [&](const RowDoc& r) {
      return r.outcome.text == declared.text;
    });
    if (!found) {
      fail(ParseErrorKind::MissingRow, declared,
           "no row for declared outcome '" + declared.text + "'");
    }
  }
  for (const Located& g : doc.game_off) {
    if (!find_label(doc.outcomes, g.text)) {
      fail(ParseErrorKind::UnknownOutcome, g, "gameoff names undeclared outcome '" + g.text + "'");
    }
  }
  for (const auto& [outcome, param] : doc.reveals) {
    if (!find_label(doc.outcomes, outcome.text)) {
      fail(ParseErrorKind::UnknownOutcome, outcome,
           "reveal names undeclared outcome '" + outcome.text + "'");
    }
    if (!find_label(doc.params, param.text)) {
      fail(ParseErrorKind::Lexical, param, "reveal names undeclared parameter '" + param.text + "'");
    }
  }
  return doc;
}

DiscreteModel compile(const ScenarioDoc& doc) {
  DiscreteModel m;
  m.name = doc.name.text;
  for (const auto& p : doc.params) m.params.push_back(p.text);
  for (const auto& o : doc.outcomes) m.outcomes.push_back(o.text);
  m.table.assign(m.outcomes.size(), {});
  for (const RowDoc& row : doc.rows) {
    m.table[m.outcome_index(row.outcome.text)] = row.values;
  }
  for (const auto& g : doc.game_off) m.game_off.insert(g.text);
  for (const auto& [outcome, param] : doc.reveals) m.reveals[outcome.text] = param.text;
  validate(m);
  return m;
}

std::string render(const DiscreteModel& model) {
  std::ostringstream out;
  out << "scenario " << model.name << "\n";
  out << "params";
  for (const auto& p : model.params) out << " " << p;
  out << "\noutcomes";
  for (const auto& o : model.outcomes) out << " " << o;
  out << "\n";
  for (std::size_t r = 0; r < model.outcomes.size(); ++r) {
    out << "row " << model.outcomes[r];
    for (const auto& v : model.table[r]) out << " " << v.str();
    out << "\n";
  }
  if (!model.game_off.empty()) {
    out << "gameoff";
    for (const auto& g : model.game_off) out << " " << g;
    out << "\n";
  }
  for (const auto& [outcome, param] : model.reveals) {
    out << "reveal " << outcome << " " << param << "\n";
  }
  return out.str();
}

}  // namespace sdg
