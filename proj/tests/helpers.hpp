#pragma once

#include <functional>

#include "doctest.h"
#include "xmodcat/error.hpp"
#include "xmodcat/group.hpp"

namespace testing {

// Kind of the Error thrown by f; fails the test when nothing is thrown.
inline xmodcat::ErrorKind error_kind(const std::function<void()>& f) {
  try {
    f();
  } catch (const xmodcat::Error& e) {
    return e.kind();
  }
  FAIL("no error was thrown");
  return xmodcat::ErrorKind::ParseError;
}

inline xmodcat::GammaModule trivial_module(const xmodcat::FiniteGroup& g) {
  return xmodcat::trivial_action(xmodcat::FiniteGroup(), g);
}

inline xmodcat::GammaModule z2_module(const xmodcat::FiniteGroup& g, const std::vector<xmodcat::Elem>& involution) {
  std::vector<xmodcat::Elem> id(g.order());
  for (int i = 0; i < g.order(); ++i) id[i] = i;
  return xmodcat::make_action(xmodcat::cyclic_group(2), g, {id, involution});
}

}  // namespace testing
