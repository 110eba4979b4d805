#include "icup/parallel.hpp"

#include <charconv>
#include <cstdlib>
#include <string>
#include <string_view>

#include "icup/errors.hpp"

namespace icup {

std::size_t worker_count() {
  const char* env = std::getenv("ICUP_THREADS");
  if (env == nullptr || *env == '\0') {
    return std::max(1u, std::thread::hardware_concurrency());
  }
  const std::string_view text(env);
  std::size_t value = 0;
  const auto [end, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc{} || end != text.data() + text.size() || value == 0) {
    throw UsageError("ICUP_THREADS must be a positive integer, got '" + std::string(text) + "'");
  }
  return value;
}

}  // namespace icup
