#pragma once

#include "oracles.hpp"
#include "toral/algebra.hpp"

namespace toral::test {

inline IntMatrix2 from(const oracle::M& m) { return {long(m.a), long(m.b), long(m.c), long(m.d)}; }

inline Integer big(long long v) { return Integer(static_cast<long>(v)); }

inline oracle::M to_oracle(const IntMatrix2& m) {
  return {m.alpha.get_si(), m.beta.get_si(), m.gamma.get_si(), m.delta.get_si()};
}

}  // namespace toral::test
