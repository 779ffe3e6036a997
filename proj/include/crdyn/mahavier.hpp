#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "crdyn/finite_relation.hpp"
#include "crdyn/specification.hpp"

namespace crdyn {

/// A finite string of point indices.
using Word = std::vector<std::size_t>;

/// Every consecutive pair of the word lies in F.
bool is_admissible(const FiniteRelation& f, const Word& w);

/// All admissible words of length L, in lexicographic order.
std::vector<Word> admissible_words(const FiniteRelation& f, std::size_t length);

/// One-sided eventually periodic sequence preperiod . cycle^inf, indexed from
/// 1 like (x_1, x_2, x_3, ...).
class EPSequence {
 public:
  EPSequence(Word preperiod, Word cycle);
  static EPSequence constant(std::size_t symbol) { return EPSequence({}, {symbol}); }

  const Word& preperiod() const { return preperiod_; }
  const Word& cycle() const { return cycle_; }

  /// x_m for m >= 1.
  std::size_t symbol(std::size_t m) const;
  /// (x_1, ..., x_n).
  Word prefix(std::size_t n) const;

  /// Shortest representation of the same infinite sequence.
  EPSequence canonical() const;
  bool admissible(const FiniteRelation& f) const;

  EPSequence shift_forward() const { return shifted(1); }
  /// sigma^j.
  EPSequence shifted(std::size_t j) const;

  /// "0,1(1,0)": preperiod then the cycle in parentheses.
  std::string to_string() const;
  static std::optional<EPSequence> parse(const std::string& text);

  /// Equality of the infinite sequences.
  friend bool operator==(const EPSequence& a, const EPSequence& b);

 private:
  Word preperiod_;
  Word cycle_;
};

/// Two-sided eventually periodic sequence: ... L L core R R ... where
/// position 0 of the sequence is core coordinate `origin` (core coordinates
/// below 0 read the left cycle, at or past core.size() the right cycle).
class BiEPSequence {
 public:
  enum class Direction { forward, backward };

  BiEPSequence(Word left_cycle, Word core, Word right_cycle, std::int64_t origin);

  const Word& left_cycle() const { return left_; }
  const Word& core() const { return core_; }
  const Word& right_cycle() const { return right_; }
  std::int64_t origin() const { return origin_; }

  /// x_i for any integer i.
  std::size_t symbol(std::int64_t i) const;
  BiEPSequence canonical() const;
  bool admissible(const FiniteRelation& f) const;
  /// forward: x'_i = x_{i+1}; backward is its inverse.
  BiEPSequence shift(Direction d) const;

  std::string to_string() const;
  friend bool operator==(const BiEPSequence& a, const BiEPSequence& b);

 private:
  std::size_t core_symbol(std::int64_t t) const;

  Word left_;
  Word core_;
  Word right_;
  std::int64_t origin_;
};

/// Boolean adjacency of a finite relation.
class TransitionMatrix {
 public:
  explicit TransitionMatrix(std::vector<std::vector<bool>> entries);
  static TransitionMatrix of(const FiniteRelation& f) { return TransitionMatrix(f.adjacency()); }

  std::size_t size() const { return m_.size(); }
  bool at(std::size_t i, std::size_t j) const { return m_[i][j]; }
  TransitionMatrix operator*(const TransitionMatrix& other) const;
  bool positive() const;
  /// Indices reachable from i in exactly `steps` steps.
  std::vector<bool> reachable(std::size_t from, std::size_t steps) const;

 private:
  std::vector<std::vector<bool>> m_;
};

/// Smallest t <= t_max with M^t entrywise positive; nullopt when M is not
/// primitive within t_max.
std::optional<std::size_t> mixing_index(const TransitionMatrix& m, std::size_t t_max);

/// Lexicographically least admissible word of length steps + 1 from `from`
/// to `to`, or nullopt.
std::optional<Word> connecting_word(const TransitionMatrix& m, std::size_t from, std::size_t to, std::size_t steps);

struct Surjectivity {
  bool first_full = false;
  bool second_full = false;
};

Surjectivity check_surjectivity(const FiniteRelation& f);
Surjectivity check_surjectivity(const BoxRelation& f);

/// (X_F^+, sigma_F^+) for a finite relation. The ambient metric is divided by
/// its diameter on construction so the sup metric stays within [0, 1].
class MahavierSystem {
 public:
  explicit MahavierSystem(FiniteRelation f);

  const FiniteRelation& relation() const { return relation_; }
  const FiniteMetricSpace& normalized_space() const { return normalized_; }
  /// Factor the original metric was multiplied by.
  const Scalar& scale() const { return scale_; }
  /// Reporting label naming the relation this system is powered by.
  std::string powered_by() const;

  /// max_{m >= 1} d(s_m, t_m) / 2^m.
  Scalar sup_metric(const EPSequence& s, const EPSequence& t) const;

 private:
  FiniteRelation relation_;
  FiniteMetricSpace normalized_;
  Scalar scale_;
};

struct MahavierSegment {
  EPSequence base;
  std::size_t k = 0;
  std::size_t l = 0;
};

/// Classical tracing in the shift system: d_sup(sigma^j y, sigma^j x_i) <= eps
/// for every segment i and j in [k_i, l_i].
TraceReport mahavier_trace_check(const MahavierSystem& sys, const std::vector<MahavierSegment>& spec,
                                 const EPSequence& y, const Scalar& eps);

/// Builds a tracer by copying each segment's window and bridging the gaps
/// with connecting words of the transition matrix. nullopt when eps <= 0 or
/// some gap cannot be bridged by an admissible word of the exact length.
std::optional<EPSequence> surgery_tracer(const MahavierSystem& sys, const std::vector<MahavierSegment>& spec,
                                         const Scalar& eps);

/// (x, f(x), f^2(x), ...) for a function relation.
EPSequence orbit_embedding(const FiniteRelation& function, std::size_t x);

}  // namespace crdyn
