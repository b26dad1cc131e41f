#pragma once

// Subcommand implementations behind the `toral` executable. Each returns the
// process exit status: 0 success, 1 verification failure, 2 usage/parse error.

#include "toral/period_set.hpp"

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>

namespace toral {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailed = 1;
inline constexpr int kExitUsage = 2;

struct ClassifyOptions {
  std::string matrix;
  bool json = false;
  Period window = 12;
  std::optional<std::uint64_t> nielsen;
  std::optional<std::uint32_t> oracle;
};
int cmd_classify(const ClassifyOptions& opts, std::ostream& out, std::ostream& err);

struct VerifyOptions {
  std::optional<std::string> matrix;
  std::optional<int> range;
  std::optional<std::string> file;
  Period window = 8;
  std::uint32_t n_max = 500;
  bool exhaustive = false;  // scan every n <= n_max even after the window is covered
  bool json = false;
  bool quiet = false;       // summary only
};
int cmd_verify(const VerifyOptions& opts, std::ostream& out, std::ostream& err);

struct TableOptions {
  int which = 2;
  std::optional<std::string> file;  // corpus override for table 2
};
int cmd_table(const TableOptions& opts, std::ostream& out, std::ostream& err);

struct ConjOptions {
  std::string a, b;
  std::optional<std::uint32_t> modulus;
  bool json = false;
};
int cmd_conj(const ConjOptions& opts, std::ostream& out, std::ostream& err);

struct CircleOptions {
  std::string degree;
  std::optional<std::uint64_t> oracle;
  bool json = false;
  Period window = 12;
};
int cmd_circle(const CircleOptions& opts, std::ostream& out, std::ostream& err);

}  // namespace toral
