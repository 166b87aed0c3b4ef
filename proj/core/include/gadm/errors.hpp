#ifndef GADM_ERRORS_HPP_
#define GADM_ERRORS_HPP_

#include <stdexcept>
#include <string>
#include <vector>

namespace gadm {

// Hard numerical failure (non-finite value, caustic). Carries enough context
// for the runner to emit a failure report before exiting with code 3.
class NumericalAbort : public std::runtime_error {
 public:
  NumericalAbort(std::string where, std::string what_happened)
      : std::runtime_error(where + ": " + what_happened),
        where_(std::move(where)), detail_(std::move(what_happened)) {}
  const std::string& where() const { return where_; }
  const std::string& detail() const { return detail_; }

 private:
  std::string where_;
  std::string detail_;
};

// Configuration / contract violation. Collects every message so a config
// file is reported with all its problems at once. Exit code 2 at the CLI.
class ConfigError : public std::runtime_error {
 public:
  explicit ConfigError(std::vector<std::string> messages)
      : std::runtime_error(join(messages)), messages_(std::move(messages)) {}
  explicit ConfigError(const std::string& one)
      : ConfigError(std::vector<std::string>{one}) {}
  const std::vector<std::string>& messages() const { return messages_; }

 private:
  static std::string join(const std::vector<std::string>& m) {
    std::string s;
    for (const auto& x : m) {
      if (!s.empty()) s += '\n';
      s += x;
    }
    return s;
  }
  std::vector<std::string> messages_;
};

}  // namespace gadm

#endif
