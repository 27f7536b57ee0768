#pragma once

#include <cstddef>

namespace lininv {

/// Process-wide limits and parallelism.
///
/// The defaults come from the environment on first use:
///   LININV_MAX_M    maximum vector length accepted (default 30)
///   LININV_THREADS  worker threads for enumerations (default 1)
///
/// Results never depend on `threads`; enumeration blocks are merged in
/// ascending bitmask order.
struct Config {
  std::size_t max_m = 30;
  std::size_t threads = 1;
  std::size_t max_weight_m = 12;
  std::size_t max_prime_n = 20;
  std::size_t max_rademacher_length = 20;

  static Config from_environment();
};

const Config& config();
void set_config(const Config& cfg);

/// Restores the previous configuration on destruction. Test helper.
class ScopedConfig {
 public:
  explicit ScopedConfig(const Config& cfg);
  ~ScopedConfig();
  ScopedConfig(const ScopedConfig&) = delete;
  ScopedConfig& operator=(const ScopedConfig&) = delete;

 private:
  Config saved_;
};

}  // namespace lininv
