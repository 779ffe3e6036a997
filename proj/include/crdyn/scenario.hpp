#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "crdyn/mahavier.hpp"
#include "crdyn/verdicts.hpp"

namespace crdyn::cli {

/// Malformed scenario text. `line` is 1-based; 0 means the whole file.
class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& reason)
      : Error(line ? "line " + std::to_string(line) + ": " + reason : reason), line_(line) {}
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

/// Well-formed text describing an inconsistent scenario.
class ValidationError : public Error {
 public:
  ValidationError(std::size_t line, const std::string& reason)
      : Error(line ? "line " + std::to_string(line) + ": " + reason : reason), line_(line) {}
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

struct SegmentDecl {
  Scalar base;
  std::size_t k = 0;
  std::size_t l = 0;
};

/// `spec NAME = (x;k,l) ...` or `ispec NAME = (x;l) ... gaps m ...`.
struct SpecDecl {
  std::string name;
  std::size_t line = 0;
  bool initial = false;
  std::vector<SegmentDecl> segments;
  std::vector<std::size_t> gaps;
};

struct MahavierSegmentDecl {
  EPSequence base;
  std::size_t k = 0;
  std::size_t l = 0;
};

struct Command {
  enum class Kind { trace, find, certify, refute, words, mixing, surjectivity, mahavier_trace, suite };

  Kind kind = Kind::trace;
  std::size_t line = 0;
  std::string source;
  std::optional<std::string> expect;

  std::string spec;
  Scalar y;
  Scalar eps;
  TraceMode mode = TraceMode::plain;

  std::string certificate;
  std::size_t n0_max = 0;

  PropertyTag property = PropertyTag::SP;
  SpacedTemplate<Scalar> spaced;
  InitialTemplate<Scalar> initial;
  ParameterRange range;

  std::size_t length = 0;
  std::size_t t_max = 0;
  std::vector<MahavierSegmentDecl> mahavier_segments;
  std::optional<EPSequence> mahavier_y;

  std::string suite;
  std::size_t count = 0;
};

struct Scenario {
  enum class Ambient { interval, finite };

  Ambient ambient = Ambient::interval;
  std::optional<Interval> interval;
  std::size_t points = 0;
  std::vector<Box> boxes;
  std::vector<std::vector<Scalar>> metric_rows;
  std::vector<std::vector<bool>> relation_rows;
  std::vector<SpecDecl> specs;
  std::vector<Command> commands;

  // Built by validation.
  std::optional<BoxRelation> box_relation;
  std::optional<FiniteRelation> finite_relation;

  const SpecDecl* find_spec(const std::string& name) const;
};

/// Parses and validates. Throws ParseError or ValidationError.
Scenario parse_scenario(std::string_view text);

struct Report {
  std::string text;
  /// Structured export of the same run (JSON).
  std::string json;
  bool all_met = true;
};

Report run(const Scenario& scenario, std::uint64_t seed);

}  // namespace crdyn::cli
