#include "crdyn/mahavier.hpp"

#include <algorithm>
#include <numeric>
#include <regex>

#include "crdyn/errors.hpp"

namespace crdyn {

namespace {

bool pairs_in(const FiniteRelation& f, const Word& w) {
  for (std::size_t i = 0; i + 1 < w.size(); ++i) {
    if (w[i] >= f.size() || w[i + 1] >= f.size() || !f.related(w[i], w[i + 1])) return false;
  }
  return std::all_of(w.begin(), w.end(), [&](std::size_t s) { return s < f.size(); });
}

// Shortest p dividing |w| with w p-periodic.
Word primitive_root(const Word& w) {
  const std::size_t n = w.size();
  for (std::size_t p = 1; p < n; ++p) {
    if (n % p != 0) continue;
    bool periodic = true;
    for (std::size_t i = p; i < n && periodic; ++i) periodic = w[i] == w[i - p];
    if (periodic) return Word(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(p));
  }
  return w;
}

std::string join(const Word& w) {
  std::string out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(w[i]);
  }
  return out;
}

Word parse_word(const std::string& text) {
  Word out;
  if (text.empty()) return out;
  std::size_t start = 0;
  while (start <= text.size()) {
    const auto comma = text.find(',', start);
    out.push_back(std::stoul(text.substr(start, comma - start)));
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return out;
}

}  // namespace

bool is_admissible(const FiniteRelation& f, const Word& w) { return pairs_in(f, w); }

std::vector<Word> admissible_words(const FiniteRelation& f, std::size_t length) {
  if (length == 0) throw InvalidArgument("word length must be positive");
  std::vector<Word> words;
  for (std::size_t x = 0; x < f.size(); ++x) words.push_back({x});
  for (std::size_t len = 1; len < length; ++len) {
    std::vector<Word> next;
    for (const auto& w : words) {
      for (std::size_t y = 0; y < f.size(); ++y) {
        if (!f.related(w.back(), y)) continue;
        next.push_back(w);
        next.back().push_back(y);
      }
    }
    words = std::move(next);
  }
  return words;
}

// ---- EPSequence ------------------------------------------------------------

EPSequence::EPSequence(Word preperiod, Word cycle) : preperiod_(std::move(preperiod)), cycle_(std::move(cycle)) {
  if (cycle_.empty()) throw InvalidArgument("eventually periodic sequence needs a non-empty cycle");
}

std::size_t EPSequence::symbol(std::size_t m) const {
  if (m == 0) throw InvalidArgument("sequence positions start at 1");
  const std::size_t idx = m - 1;
  if (idx < preperiod_.size()) return preperiod_[idx];
  return cycle_[(idx - preperiod_.size()) % cycle_.size()];
}

Word EPSequence::prefix(std::size_t n) const {
  Word out;
  out.reserve(n);
  for (std::size_t m = 1; m <= n; ++m) out.push_back(symbol(m));
  return out;
}

EPSequence EPSequence::canonical() const {
  Word pre = preperiod_;
  Word cyc = primitive_root(cycle_);
  while (!pre.empty() && pre.back() == cyc.back()) {
    pre.pop_back();
    std::rotate(cyc.begin(), cyc.end() - 1, cyc.end());
  }
  return EPSequence(std::move(pre), std::move(cyc));
}

bool EPSequence::admissible(const FiniteRelation& f) const {
  Word window = preperiod_;
  window.insert(window.end(), cycle_.begin(), cycle_.end());
  window.insert(window.end(), cycle_.begin(), cycle_.end());
  return pairs_in(f, window);
}

EPSequence EPSequence::shifted(std::size_t j) const {
  if (j <= preperiod_.size()) {
    return EPSequence(Word(preperiod_.begin() + static_cast<std::ptrdiff_t>(j), preperiod_.end()), cycle_);
  }
  Word cyc = cycle_;
  const std::size_t r = (j - preperiod_.size()) % cyc.size();
  std::rotate(cyc.begin(), cyc.begin() + static_cast<std::ptrdiff_t>(r), cyc.end());
  return EPSequence({}, std::move(cyc));
}

std::string EPSequence::to_string() const { return join(preperiod_) + "(" + join(cycle_) + ")"; }

std::optional<EPSequence> EPSequence::parse(const std::string& text) {
  static const std::regex pattern(R"(^((?:\d+)(?:,\d+)*)?\((\d+(?:,\d+)*)\)$)");
  std::smatch m;
  if (!std::regex_match(text, m, pattern)) return std::nullopt;
  return EPSequence(parse_word(m[1].str()), parse_word(m[2].str()));
}

bool operator==(const EPSequence& a, const EPSequence& b) {
  const auto ca = a.canonical();
  const auto cb = b.canonical();
  return ca.preperiod_ == cb.preperiod_ && ca.cycle_ == cb.cycle_;
}

// ---- BiEPSequence ----------------------------------------------------------

BiEPSequence::BiEPSequence(Word left_cycle, Word core, Word right_cycle, std::int64_t origin)
    : left_(std::move(left_cycle)), core_(std::move(core)), right_(std::move(right_cycle)), origin_(origin) {
  if (left_.empty() || right_.empty()) throw InvalidArgument("two-sided sequence needs non-empty cycles");
}

std::size_t BiEPSequence::core_symbol(std::int64_t t) const {
  const auto lsize = static_cast<std::int64_t>(left_.size());
  const auto csize = static_cast<std::int64_t>(core_.size());
  const auto rsize = static_cast<std::int64_t>(right_.size());
  if (t < 0) return left_[static_cast<std::size_t>(((t % lsize) + lsize) % lsize)];
  if (t < csize) return core_[static_cast<std::size_t>(t)];
  return right_[static_cast<std::size_t>((t - csize) % rsize)];
}

std::size_t BiEPSequence::symbol(std::int64_t i) const { return core_symbol(origin_ + i); }

BiEPSequence BiEPSequence::canonical() const {
  Word left = primitive_root(left_);
  Word core = core_;
  Word right = primitive_root(right_);
  std::int64_t origin = origin_;
  while (!core.empty() && core.front() == left.front()) {
    core.erase(core.begin());
    std::rotate(left.begin(), left.begin() + 1, left.end());
    --origin;
  }
  while (!core.empty() && core.back() == right.back()) {
    core.pop_back();
    std::rotate(right.begin(), right.end() - 1, right.end());
  }
  if (core.empty() && left == right) {
    // Purely periodic: only the phase of the origin matters.
    const auto p = static_cast<std::int64_t>(right.size());
    const auto phase = ((origin % p) + p) % p;
    std::rotate(right.begin(), right.begin() + phase, right.end());
    return BiEPSequence(right, {}, right, 0);
  }
  return BiEPSequence(std::move(left), std::move(core), std::move(right), origin);
}

bool BiEPSequence::admissible(const FiniteRelation& f) const {
  Word window = left_;
  window.insert(window.end(), left_.begin(), left_.end());
  window.insert(window.end(), core_.begin(), core_.end());
  window.insert(window.end(), right_.begin(), right_.end());
  window.insert(window.end(), right_.begin(), right_.end());
  return pairs_in(f, window);
}

BiEPSequence BiEPSequence::shift(Direction d) const {
  return BiEPSequence(left_, core_, right_, origin_ + (d == Direction::forward ? 1 : -1));
}

std::string BiEPSequence::to_string() const {
  return "(" + join(left_) + ")|" + join(core_) + "|(" + join(right_) + ")@" + std::to_string(origin_);
}

bool operator==(const BiEPSequence& a, const BiEPSequence& b) {
  const auto ca = a.canonical();
  const auto cb = b.canonical();
  return ca.left_ == cb.left_ && ca.core_ == cb.core_ && ca.right_ == cb.right_ && ca.origin_ == cb.origin_;
}

// ---- TransitionMatrix ------------------------------------------------------

TransitionMatrix::TransitionMatrix(std::vector<std::vector<bool>> entries) : m_(std::move(entries)) {
  for (const auto& row : m_) {
    if (row.size() != m_.size()) throw SizeMismatchError(m_.size(), row.size());
  }
}

TransitionMatrix TransitionMatrix::operator*(const TransitionMatrix& other) const {
  const std::size_t n = size();
  if (other.size() != n) throw SizeMismatchError(n, other.size());
  std::vector<std::vector<bool>> out(n, std::vector<bool>(n, false));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = 0; k < n; ++k) {
      if (!m_[i][k]) continue;
      for (std::size_t j = 0; j < n; ++j) {
        if (other.m_[k][j]) out[i][j] = true;
      }
    }
  }
  return TransitionMatrix(std::move(out));
}

bool TransitionMatrix::positive() const {
  return std::all_of(m_.begin(), m_.end(),
                     [](const std::vector<bool>& row) { return std::all_of(row.begin(), row.end(), [](bool b) { return b; }); });
}

std::vector<bool> TransitionMatrix::reachable(std::size_t from, std::size_t steps) const {
  std::vector<bool> current(size(), false);
  current[from] = true;
  for (std::size_t s = 0; s < steps; ++s) {
    std::vector<bool> next(size(), false);
    for (std::size_t i = 0; i < size(); ++i) {
      if (!current[i]) continue;
      for (std::size_t j = 0; j < size(); ++j) {
        if (m_[i][j]) next[j] = true;
      }
    }
    current = std::move(next);
  }
  return current;
}

std::optional<std::size_t> mixing_index(const TransitionMatrix& m, std::size_t t_max) {
  if (m.size() == 0) return std::nullopt;
  TransitionMatrix power = m;
  for (std::size_t t = 1; t <= t_max; ++t) {
    if (power.positive()) return t;
    power = power * m;
  }
  return std::nullopt;
}

std::optional<Word> connecting_word(const TransitionMatrix& m, std::size_t from, std::size_t to, std::size_t steps) {
  const std::size_t n = m.size();
  if (from >= n || to >= n) throw InvalidArgument("connecting word endpoint outside the space");
  // can[s][v]: `to` is reachable from v in exactly s steps.
  std::vector<std::vector<bool>> can(steps + 1, std::vector<bool>(n, false));
  can[0][to] = true;
  for (std::size_t s = 1; s <= steps; ++s) {
    for (std::size_t v = 0; v < n; ++v) {
      for (std::size_t w = 0; w < n && !can[s][v]; ++w) can[s][v] = m.at(v, w) && can[s - 1][w];
    }
  }
  if (!can[steps][from]) return std::nullopt;
  Word out{from};
  for (std::size_t s = steps; s >= 1; --s) {
    const std::size_t cur = out.back();
    for (std::size_t w = 0; w < n; ++w) {
      if (m.at(cur, w) && can[s - 1][w]) {
        out.push_back(w);
        break;
      }
    }
  }
  return out;
}

// ---- surjectivity ----------------------------------------------------------

Surjectivity check_surjectivity(const FiniteRelation& f) {
  return {f.project(Projection::first) == f.full_set(), f.project(Projection::second) == f.full_set()};
}

Surjectivity check_surjectivity(const BoxRelation& f) {
  return {f.project(Projection::first) == f.full_set(), f.project(Projection::second) == f.full_set()};
}

// ---- MahavierSystem --------------------------------------------------------

namespace {

Scalar normalizing_factor(const FiniteMetricSpace& space) {
  const Scalar diam = space.diameter();
  return diam.sign() > 0 ? Scalar(1) / diam : Scalar(1);
}

}  // namespace

MahavierSystem::MahavierSystem(FiniteRelation f)
    : relation_(std::move(f)),
      normalized_(relation_.space().scaled(normalizing_factor(relation_.space()))),
      scale_(normalizing_factor(relation_.space())) {}

std::string MahavierSystem::powered_by() const {
  std::string pairs;
  for (std::size_t x = 0; x < relation_.size(); ++x) {
    for (std::size_t y = 0; y < relation_.size(); ++y) {
      if (!relation_.related(x, y)) continue;
      if (!pairs.empty()) pairs += ",";
      pairs += "(" + std::to_string(x) + "," + std::to_string(y) + ")";
    }
  }
  return "powered by F = {" + pairs + "} on " + std::to_string(relation_.size()) + " points";
}

Scalar MahavierSystem::sup_metric(const EPSequence& s, const EPSequence& t) const {
  // Past max(preperiods) the pair sequence repeats with period lcm(cycles),
  // and later repeats carry smaller weights.
  const std::size_t window = std::max(s.preperiod().size(), t.preperiod().size()) +
                             std::lcm(s.cycle().size(), t.cycle().size());
  Scalar best(0);
  for (std::size_t m = 1; m <= window; ++m) {
    const Scalar weight = Scalar::inverse_power_of_two(m);
    if (weight <= best) break;
    const Scalar term = normalized_.distance(s.symbol(m), t.symbol(m)) * weight;
    if (best < term) best = term;
  }
  return best;
}

TraceReport mahavier_trace_check(const MahavierSystem& sys, const std::vector<MahavierSegment>& spec,
                                 const EPSequence& y, const Scalar& eps) {
  if (!y.admissible(sys.relation())) throw InvalidArgument("tracer " + y.to_string() + " is not admissible");
  std::vector<TraceEntry> entries;
  for (std::size_t i = 0; i < spec.size(); ++i) {
    const auto& seg = spec[i];
    if (seg.k > seg.l) throw BadRangeError(seg.k, seg.l);
    if (!seg.base.admissible(sys.relation())) {
      throw InvalidArgument("base " + seg.base.to_string() + " is not admissible");
    }
    for (std::size_t j = seg.k; j <= seg.l; ++j) {
      entries.push_back({i + 1, j, j, sys.sup_metric(y.shifted(j), seg.base.shifted(j))});
    }
  }
  return finish_report(TraceMode::plain, eps, std::move(entries));
}

std::optional<EPSequence> surgery_tracer(const MahavierSystem& sys, const std::vector<MahavierSegment>& spec,
                                         const Scalar& eps) {
  if (spec.empty() || eps.sign() <= 0) return std::nullopt;
  // Agreement on r symbols after each position keeps d_sup <= 2^-(r+1) <= eps.
  std::size_t r = 0;
  while (eps < Scalar::inverse_power_of_two(r + 1)) ++r;
  if (r == 0) return spec.front().base;

  const auto matrix = TransitionMatrix::of(sys.relation());
  Word word = spec.front().base.prefix(spec.front().l + r);
  for (std::size_t i = 1; i < spec.size(); ++i) {
    const auto& seg = spec[i];
    const std::size_t start = seg.k + 1;
    const std::size_t end = seg.l + r;
    if (start <= word.size()) return std::nullopt;
    auto bridge = connecting_word(matrix, word.back(), seg.base.symbol(start), start - word.size());
    if (!bridge) return std::nullopt;
    word.insert(word.end(), bridge->begin() + 1, bridge->end());
    for (std::size_t p = start + 1; p <= end; ++p) word.push_back(seg.base.symbol(p));
  }
  const auto tail = spec.back().base.shifted(spec.back().l + r);
  word.insert(word.end(), tail.preperiod().begin(), tail.preperiod().end());
  return EPSequence(std::move(word), tail.cycle()).canonical();
}

EPSequence orbit_embedding(const FiniteRelation& function, std::size_t x) {
  if (!function.is_function()) throw InvalidArgument("orbit embedding needs a function relation");
  Word seen;
  std::size_t current = x;
  for (;;) {
    auto hit = std::find(seen.begin(), seen.end(), current);
    if (hit != seen.end()) return EPSequence(Word(seen.begin(), hit), Word(hit, seen.end()));
    seen.push_back(current);
    current = function.image(PointSet::single(current)).min();
  }
}

}  // namespace crdyn
