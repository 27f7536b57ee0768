#include "lininv/config.hpp"

#include <charconv>
#include <cstdlib>
#include <string_view>

namespace lininv {

namespace {

std::size_t env_or(const char* name, std::size_t fallback) {
  const char* raw = std::getenv(name);
  if (raw == nullptr) return fallback;
  const std::string_view s(raw);
  std::size_t value = 0;
  const auto [end, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc{} || end != s.data() + s.size() || value == 0) return fallback;
  return value;
}

Config& storage() {
  static Config cfg = Config::from_environment();
  return cfg;
}

}  // namespace

Config Config::from_environment() {
  Config cfg;
  cfg.max_m = env_or("LININV_MAX_M", cfg.max_m);
  cfg.threads = env_or("LININV_THREADS", cfg.threads);
  return cfg;
}

const Config& config() { return storage(); }

void set_config(const Config& cfg) { storage() = cfg; }

ScopedConfig::ScopedConfig(const Config& cfg) : saved_(config()) { set_config(cfg); }

ScopedConfig::~ScopedConfig() { set_config(saved_); }

}  // namespace lininv
