#include <algorithm>
#include <charconv>
#include <set>
#include <sstream>

#include "crdyn/scenario.hpp"

namespace crdyn::cli {

namespace {

class Cursor {
 public:
  Cursor(std::vector<std::string> tokens, std::size_t line) : tokens_(std::move(tokens)), line_(line) {}

  bool done() const { return pos_ >= tokens_.size(); }
  const std::string& peek() const { return tokens_[pos_]; }
  std::size_t line() const { return line_; }

  std::string next(const std::string& what) {
    if (done()) fail("expected " + what);
    return tokens_[pos_++];
  }
  void expect(const std::string& keyword) {
    const auto tok = next("'" + keyword + "'");
    if (tok != keyword) fail("expected '" + keyword + "', got '" + tok + "'");
  }
  bool accept(const std::string& keyword) {
    if (!done() && peek() == keyword) {
      ++pos_;
      return true;
    }
    return false;
  }

  [[noreturn]] void fail(const std::string& reason) const { throw ParseError(line_, reason); }

 private:
  std::vector<std::string> tokens_;
  std::size_t line_;
  std::size_t pos_ = 0;
};

Scalar scalar_of(const std::string& tok, const Cursor& c) {
  auto s = Scalar::parse(tok);
  if (!s) c.fail("expected an integer or fraction literal, got '" + tok + "'");
  return *s;
}

std::size_t count_of(const std::string& tok, const Cursor& c) {
  std::size_t out = 0;
  const auto* end = tok.data() + tok.size();
  auto [ptr, ec] = std::from_chars(tok.data(), end, out);
  if (ec != std::errc() || ptr != end || tok.empty()) c.fail("expected a non-negative integer, got '" + tok + "'");
  return out;
}

Interval interval_of(const std::string& tok, const Cursor& c) {
  if (tok.size() >= 3 && tok.front() == '{' && tok.back() == '}') {
    return Interval::point(scalar_of(tok.substr(1, tok.size() - 2), c));
  }
  if (tok.size() >= 5 && tok.front() == '[' && tok.back() == ']') {
    const auto comma = tok.find(',');
    if (comma == std::string::npos) c.fail("interval needs two endpoints: '" + tok + "'");
    const Scalar lo = scalar_of(tok.substr(1, comma - 1), c);
    const Scalar hi = scalar_of(tok.substr(comma + 1, tok.size() - comma - 2), c);
    if (hi < lo) c.fail("interval endpoints out of order: '" + tok + "'");
    return Interval(lo, hi);
  }
  c.fail("expected [a,b] or {a}, got '" + tok + "'");
}

ParameterRange range_of(const std::string& tok, const Cursor& c) {
  const auto dots = tok.find("..");
  if (dots == std::string::npos) {
    const auto v = count_of(tok, c);
    return {v, v};
  }
  ParameterRange r{count_of(tok.substr(0, dots), c), count_of(tok.substr(dots + 2), c)};
  if (r.hi < r.lo) c.fail("empty range '" + tok + "'");
  return r;
}

/// Splits "(a;b,c)" into {"a", "b", "c"}.
std::vector<std::string> tuple_of(const std::string& tok, const Cursor& c) {
  if (tok.size() < 3 || tok.front() != '(' || tok.back() != ')') c.fail("expected (x;...), got '" + tok + "'");
  const auto semi = tok.find(';');
  if (semi == std::string::npos) c.fail("expected ';' in '" + tok + "'");
  std::vector<std::string> parts{tok.substr(1, semi - 1)};
  std::string rest = tok.substr(semi + 1, tok.size() - semi - 2);
  std::size_t start = 0;
  for (;;) {
    const auto comma = rest.find(',', start);
    parts.push_back(rest.substr(start, comma - start));
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return parts;
}

bool is_tuple(const Cursor& c) { return !c.done() && !c.peek().empty() && c.peek().front() == '('; }

EPSequence ep_of(const std::string& tok, const Cursor& c) {
  auto s = EPSequence::parse(tok);
  if (!s) c.fail("expected an eventually periodic sequence like 0,1(1,0), got '" + tok + "'");
  return *s;
}

TraceMode mode_of_token(const std::string& tok, const Cursor& c) {
  if (tok == "plain") return TraceMode::plain;
  if (tok == "hausdorff") return TraceMode::hausdorff;
  c.fail("mode must be plain or hausdorff, got '" + tok + "'");
}

void read_expect(Cursor& c, Command& cmd, std::initializer_list<const char*> allowed) {
  if (c.accept("expect")) {
    const auto tok = c.next("an expectation");
    if (std::none_of(allowed.begin(), allowed.end(), [&](const char* a) { return tok == a; })) {
      std::string list;
      for (const char* a : allowed) list += (list.empty() ? "" : "|") + std::string(a);
      c.fail("expectation must be " + list + ", got '" + tok + "'");
    }
    cmd.expect = tok;
  }
  if (!c.done()) c.fail("unexpected '" + c.peek() + "'");
}

void parse_spec(Cursor& c, Scenario& s, bool initial) {
  SpecDecl d;
  d.name = c.next("a specification name");
  d.line = c.line();
  d.initial = initial;
  c.expect("=");
  while (is_tuple(c)) {
    const auto parts = tuple_of(c.next("a segment"), c);
    if (initial) {
      if (parts.size() != 2) c.fail("initial segments are written (x;l)");
      d.segments.push_back({scalar_of(parts[0], c), 0, count_of(parts[1], c)});
    } else {
      if (parts.size() != 3) c.fail("segments are written (x;k,l)");
      d.segments.push_back({scalar_of(parts[0], c), count_of(parts[1], c), count_of(parts[2], c)});
      if (d.segments.back().l < d.segments.back().k) c.fail("segment has k > l");
    }
  }
  if (d.segments.empty()) c.fail("specification needs at least one segment");
  if (initial) {
    c.expect("gaps");
    while (!c.done()) d.gaps.push_back(count_of(c.next("a gap"), c));
    if (d.gaps.size() + 1 != d.segments.size()) c.fail("need one gap between each pair of segments");
    if (std::find(d.gaps.begin(), d.gaps.end(), std::size_t{0}) != d.gaps.end()) c.fail("gaps must be positive");
  }
  if (!c.done()) c.fail("unexpected '" + c.peek() + "'");
  if (s.find_spec(d.name)) c.fail("specification '" + d.name + "' declared twice");
  s.specs.push_back(std::move(d));
}

void parse_refute(Cursor& c, Command& cmd) {
  const auto tag_text = c.next("a property (SP, HSP, ISP, HISP)");
  const auto tag = parse_property_tag(tag_text);
  if (!tag) c.fail("unknown property '" + tag_text + "'");
  cmd.property = *tag;
  c.expect("eps");
  cmd.eps = scalar_of(c.next("eps"), c);
  c.expect("template");
  if (is_initial(cmd.property)) {
    while (is_tuple(c)) {
      const auto parts = tuple_of(c.next("a segment"), c);
      if (parts.size() != 2) c.fail("initial template segments are written (x;l)");
      cmd.initial.segments.push_back({scalar_of(parts[0], c), count_of(parts[1], c)});
    }
    if (cmd.initial.segments.empty()) c.fail("template needs at least one segment");
    c.expect("gaps");
  } else {
    bool first = true;
    while (is_tuple(c)) {
      const auto parts = tuple_of(c.next("a segment"), c);
      if (first) {
        if (parts.size() != 3) c.fail("first template segment is written (x;k,l)");
        cmd.spaced.first_k = count_of(parts[1], c);
        const auto l = count_of(parts[2], c);
        if (l < cmd.spaced.first_k) c.fail("segment has k > l");
        cmd.spaced.segments.push_back({scalar_of(parts[0], c), l - cmd.spaced.first_k});
        first = false;
      } else {
        if (parts.size() != 2 || parts[1].empty() || parts[1].front() != '+') {
          c.fail("later template segments are written (x;+length)");
        }
        cmd.spaced.segments.push_back({scalar_of(parts[0], c), count_of(parts[1].substr(1), c)});
      }
    }
    if (first) c.fail("template needs at least one segment");
    c.expect("N");
  }
  cmd.range = range_of(c.next("a range"), c);
  if (cmd.range.lo == 0) c.fail("range must start at 1 or later");
  read_expect(c, cmd, {"refutation", "inconclusive"});
}

void parse_mahavier(Cursor& c, Command& cmd) {
  const auto what = c.next("a mahavier analysis");
  if (what == "words") {
    cmd.kind = Command::Kind::words;
    cmd.length = count_of(c.next("a word length"), c);
    if (cmd.length == 0) c.fail("word length must be positive");
    read_expect(c, cmd, {});
  } else if (what == "mixing") {
    cmd.kind = Command::Kind::mixing;
    c.expect("t_max");
    cmd.t_max = count_of(c.next("t_max"), c);
    read_expect(c, cmd, {"pass", "fail"});
  } else if (what == "surjectivity") {
    cmd.kind = Command::Kind::surjectivity;
    read_expect(c, cmd, {"pass", "fail"});
  } else if (what == "trace") {
    cmd.kind = Command::Kind::mahavier_trace;
    c.expect("eps");
    cmd.eps = scalar_of(c.next("eps"), c);
    while (c.accept("segment")) {
      auto base = ep_of(c.next("a base sequence"), c);
      const auto k = count_of(c.next("k"), c);
      const auto l = count_of(c.next("l"), c);
      if (l < k) c.fail("segment has k > l");
      cmd.mahavier_segments.push_back({std::move(base), k, l});
    }
    if (cmd.mahavier_segments.empty()) c.fail("mahavier trace needs at least one segment");
    if (c.accept("y")) cmd.mahavier_y = ep_of(c.next("a tracer sequence"), c);
    read_expect(c, cmd, {"pass", "fail"});
  } else {
    c.fail("unknown mahavier analysis '" + what + "'");
  }
}

const std::set<std::string> kSuites{"all",
                                    "implications",
                                    "hausdorff-implies-plain",
                                    "initial-round-trip",
                                    "conjugacy-invariance",
                                    "function-agreement",
                                    "metric",
                                    "automaton-periodicity"};

Command parse_command(const std::string& head, Cursor& c) {
  Command cmd;
  cmd.line = c.line();
  if (head == "trace") {
    cmd.kind = Command::Kind::trace;
    cmd.spec = c.next("a specification name");
    c.expect("y");
    cmd.y = scalar_of(c.next("y"), c);
    c.expect("eps");
    cmd.eps = scalar_of(c.next("eps"), c);
    c.expect("mode");
    cmd.mode = mode_of_token(c.next("mode"), c);
    read_expect(c, cmd, {"pass", "fail"});
  } else if (head == "find") {
    cmd.kind = Command::Kind::find;
    cmd.spec = c.next("a specification name");
    c.expect("eps");
    cmd.eps = scalar_of(c.next("eps"), c);
    c.expect("mode");
    cmd.mode = mode_of_token(c.next("mode"), c);
    read_expect(c, cmd, {"pass", "fail"});
  } else if (head == "certify") {
    cmd.kind = Command::Kind::certify;
    cmd.certificate = c.next("a certificate kind");
    if (cmd.certificate == "eventual-hausdorff") {
      c.expect("eps");
      cmd.eps = scalar_of(c.next("eps"), c);
    }
    if (cmd.certificate == "common-image" || cmd.certificate == "full-image" ||
        cmd.certificate == "eventual-hausdorff") {
      c.expect("n0_max");
      cmd.n0_max = count_of(c.next("n0_max"), c);
    } else if (cmd.certificate != "trivial-fiber") {
      c.fail("unknown certificate kind '" + cmd.certificate + "'");
    }
    read_expect(c, cmd, {"certificate", "notfound"});
  } else if (head == "refute") {
    cmd.kind = Command::Kind::refute;
    parse_refute(c, cmd);
  } else if (head == "mahavier") {
    parse_mahavier(c, cmd);
  } else if (head == "suite") {
    cmd.kind = Command::Kind::suite;
    cmd.suite = c.next("a suite name");
    if (!kSuites.count(cmd.suite)) c.fail("unknown suite '" + cmd.suite + "'");
    c.expect("count");
    cmd.count = count_of(c.next("count"), c);
    read_expect(c, cmd, {"pass", "fail"});
  } else {
    c.fail("unknown keyword '" + head + "'");
  }
  return cmd;
}

// ---- validation ------------------------------------------------------------

void check_point(const Scenario& s, const Scalar& x, std::size_t line) {
  if (s.ambient == Scenario::Ambient::interval) {
    if (!s.interval->contains(x)) throw ValidationError(line, "point " + x.to_string() + " is outside the space");
    return;
  }
  if (!x.is_integer() || x.sign() < 0 || !(x < Scalar(static_cast<long>(s.points)))) {
    throw ValidationError(line, "point " + x.to_string() + " is not an index of the finite space");
  }
}

void validate(Scenario& s) {
  if (s.ambient == Scenario::Ambient::interval) {
    if (s.boxes.empty()) throw ValidationError(0, "no box declared");
    try {
      s.box_relation.emplace(*s.interval, s.boxes);
    } catch (const Error& e) {
      throw ValidationError(0, e.what());
    }
  } else {
    const std::size_t n = s.points;
    if (s.relation_rows.size() != n) {
      throw ValidationError(0, "expected " + std::to_string(n) + " relation rows, got " +
                                   std::to_string(s.relation_rows.size()));
    }
    FiniteMetricSpace space = FiniteMetricSpace::discrete(n);
    if (!s.metric_rows.empty()) {
      if (s.metric_rows.size() != n) {
        throw ValidationError(0, "expected " + std::to_string(n) + " metric rows, got " +
                                     std::to_string(s.metric_rows.size()));
      }
      std::vector<Scalar> flat;
      for (const auto& row : s.metric_rows) flat.insert(flat.end(), row.begin(), row.end());
      space = FiniteMetricSpace(n, std::move(flat));
      const auto check = validate_metric(space);
      if (!check.ok()) throw ValidationError(0, "metric: " + check.describe());
    }
    s.finite_relation.emplace(std::move(space), s.relation_rows);
  }

  for (const auto& d : s.specs) {
    for (const auto& seg : d.segments) check_point(s, seg.base, d.line);
  }
  for (const auto& cmd : s.commands) {
    switch (cmd.kind) {
      case Command::Kind::trace:
      case Command::Kind::find:
        if (!s.find_spec(cmd.spec)) throw ValidationError(cmd.line, "unknown specification '" + cmd.spec + "'");
        if (cmd.kind == Command::Kind::trace) check_point(s, cmd.y, cmd.line);
        break;
      case Command::Kind::refute:
        for (const auto& seg : cmd.spaced.segments) check_point(s, seg.base, cmd.line);
        for (const auto& seg : cmd.initial.segments) check_point(s, seg.base, cmd.line);
        break;
      case Command::Kind::words:
      case Command::Kind::mixing:
      case Command::Kind::mahavier_trace:
        if (s.ambient != Scenario::Ambient::finite) {
          throw ValidationError(cmd.line, "shift-space analyses need a finite ambient space");
        }
        for (const auto& seg : cmd.mahavier_segments) {
          if (!seg.base.admissible(*s.finite_relation)) {
            throw ValidationError(cmd.line, "sequence " + seg.base.to_string() + " is not admissible");
          }
        }
        if (cmd.mahavier_y && !cmd.mahavier_y->admissible(*s.finite_relation)) {
          throw ValidationError(cmd.line, "sequence " + cmd.mahavier_y->to_string() + " is not admissible");
        }
        break;
      default:
        break;
    }
    if (cmd.eps.sign() < 0) throw ValidationError(cmd.line, "eps must be non-negative");
  }
}

std::vector<std::string> split(const std::string& line) {
  std::istringstream in(line);
  std::vector<std::string> out;
  for (std::string tok; in >> tok;) out.push_back(tok);
  return out;
}

}  // namespace

const SpecDecl* Scenario::find_spec(const std::string& name) const {
  for (const auto& d : specs) {
    if (d.name == name) return &d;
  }
  return nullptr;
}

Scenario parse_scenario(std::string_view text) {
  Scenario s;
  bool have_ambient = false;
  std::size_t line_no = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    const auto end = std::min(text.find('\n', start), text.size());
    std::string raw(text.substr(start, end - start));
    start = end + 1;
    ++line_no;
    if (const auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
    if (!raw.empty() && raw.back() == '\r') raw.pop_back();
    auto tokens = split(raw);
    if (tokens.empty()) {
      if (end == text.size()) break;
      continue;
    }
    const std::string head = tokens.front();
    Cursor c(std::vector<std::string>(tokens.begin() + 1, tokens.end()), line_no);

    if (head == "ambient") {
      if (have_ambient) c.fail("ambient declared twice");
      const auto kind = c.next("interval or finite");
      if (kind == "interval") {
        s.ambient = Scenario::Ambient::interval;
        const Scalar lo = scalar_of(c.next("lower endpoint"), c);
        const Scalar hi = scalar_of(c.next("upper endpoint"), c);
        if (hi < lo) c.fail("ambient endpoints out of order");
        s.interval = Interval(lo, hi);
      } else if (kind == "finite") {
        s.ambient = Scenario::Ambient::finite;
        s.points = count_of(c.next("number of points"), c);
        if (s.points == 0) c.fail("finite space needs at least one point");
      } else {
        c.fail("ambient must be interval or finite, got '" + kind + "'");
      }
      if (!c.done()) c.fail("unexpected '" + c.peek() + "'");
      have_ambient = true;
    } else if (!have_ambient) {
      c.fail("'" + head + "' before the ambient declaration");
    } else if (head == "box") {
      if (s.ambient != Scenario::Ambient::interval) c.fail("boxes need an interval ambient");
      const Interval a = interval_of(c.next("domain"), c);
      c.expect("x");
      const Interval b = interval_of(c.next("range"), c);
      if (!c.done()) c.fail("unexpected '" + c.peek() + "'");
      s.boxes.push_back({a, b});
    } else if (head == "metric" || head == "relation") {
      if (s.ambient != Scenario::Ambient::finite) c.fail("'" + head + "' rows need a finite ambient");
      std::vector<std::string> row;
      while (!c.done()) row.push_back(c.next("entry"));
      if (row.size() != s.points) {
        c.fail("row has " + std::to_string(row.size()) + " entries, expected " + std::to_string(s.points));
      }
      if (head == "metric") {
        std::vector<Scalar> values;
        for (const auto& t : row) values.push_back(scalar_of(t, c));
        s.metric_rows.push_back(std::move(values));
      } else {
        std::vector<bool> values;
        for (const auto& t : row) {
          if (t != "0" && t != "1") c.fail("relation entries are 0 or 1, got '" + t + "'");
          values.push_back(t == "1");
        }
        s.relation_rows.push_back(std::move(values));
      }
    } else if (head == "spec" || head == "ispec") {
      parse_spec(c, s, head == "ispec");
    } else {
      auto cmd = parse_command(head, c);
      cmd.source = raw.substr(raw.find_first_not_of(" \t"));
      while (!cmd.source.empty() && (cmd.source.back() == ' ' || cmd.source.back() == '\t')) cmd.source.pop_back();
      s.commands.push_back(std::move(cmd));
    }
    if (end == text.size()) break;
  }
  if (!have_ambient) throw ParseError(0, "no ambient declaration");
  validate(s);
  return s;
}

}  // namespace crdyn::cli
