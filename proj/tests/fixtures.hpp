#pragma once

#include "fsk/frobenius.hpp"
#include "support.hpp"

namespace fsk::testing {

inline RingPresentation node(std::uint64_t p = 2) {
  auto r = ring(p, {"x", "y"});
  return RingPresentation::hypersurface(P(r, "x*y"));
}

inline RingPresentation snc() {
  auto r = ring(2, {"x", "y", "z"});
  return RingPresentation::hypersurface(P(r, "x*y*z"));
}

inline RingPresentation cubic() {
  auto r = ring(7, {"x", "y", "z"});
  return RingPresentation::hypersurface(P(r, "x^3+y^3+z^3"));
}

inline RingPresentation quartic() {
  auto r = ring(5, {"x", "y", "z"});
  return RingPresentation::hypersurface(P(r, "x^4+y^4+z^4"));
}

}  // namespace fsk::testing
