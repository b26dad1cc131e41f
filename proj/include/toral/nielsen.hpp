#pragma once

#include "toral/algebra.hpp"

#include <cstdint>
#include <vector>

namespace toral {

/// N(f_A^n) = |det(id - A^n)| = |1 + d^n - tr(A^n)|, n >= 1.
Integer nielsen_number(const IntMatrix2& a, std::uint64_t n);

/// Same quantity evaluated from the explicit power A^n.
Integer nielsen_number_direct(const IntMatrix2& a, std::uint64_t n);

/// tr(A^n) from s_n = t s_{n-1} - d s_{n-2}, s_0 = 2, s_1 = t.
Integer power_trace(const IntMatrix2& a, std::uint64_t n);

struct NielsenSequence {
  std::vector<Integer> values;  // values[n-1] = N(f_A^n)

  friend bool operator==(const NielsenSequence&, const NielsenSequence&) = default;
};

/// N(f_A^n) for n = 1..limit via the trace recurrence. The first six terms
/// are cross-checked against explicit powers; a mismatch throws
/// std::logic_error.
NielsenSequence nielsen_sequence(const IntMatrix2& a, std::uint64_t limit);

}  // namespace toral
