#pragma once

#include "crdyn/box_relation.hpp"
#include "crdyn/finite_relation.hpp"

namespace fixtures {

using crdyn::Box;
using crdyn::BoxRelation;
using crdyn::Interval;
using crdyn::Scalar;

inline Scalar q(long n, long d = 1) { return Scalar(n, d); }
inline Interval iv(const Scalar& a, const Scalar& b) { return Interval(a, b); }
inline Interval pt(const Scalar& a) { return Interval::point(a); }

/// [0,1/2] x {0}  u  [1/2,1] x {1}  u  {1} x [0,1]
inline BoxRelation monica() {
  return BoxRelation(iv(q(0), q(1)), {{iv(q(0), q(1, 2)), pt(q(0))},
                                      {iv(q(1, 2), q(1)), pt(q(1))},
                                      {pt(q(1)), iv(q(0), q(1))}});
}

/// [0,1/2] x {0}  u  {0} x [0,1/2]  u  [1/2,1] x {1}  u  {1} x [1/2,1]
inline BoxRelation exi() {
  return BoxRelation(iv(q(0), q(1)), {{iv(q(0), q(1, 2)), pt(q(0))},
                                      {pt(q(0)), iv(q(0), q(1, 2))},
                                      {iv(q(1, 2), q(1)), pt(q(1))},
                                      {pt(q(1)), iv(q(1, 2), q(1))}});
}

/// [0,1] x {1}
inline BoxRelation constant_one() { return BoxRelation(iv(q(0), q(1)), {{iv(q(0), q(1)), pt(q(1))}}); }

inline crdyn::FiniteRelation golden_mean() {
  return crdyn::FiniteRelation(crdyn::FiniteMetricSpace::discrete(2), {{true, true}, {true, false}});
}

inline crdyn::FiniteRelation full_shift() {
  return crdyn::FiniteRelation(crdyn::FiniteMetricSpace::discrete(2), {{true, true}, {true, true}});
}

}  // namespace fixtures
