#include "wormlab/budget.hpp"

#include <charconv>
#include <cstdlib>
#include <stdexcept>
#include <string>
#include <string_view>

namespace wormlab {
namespace {

void override_from(const char* name, std::uint64_t& field) {
  const char* raw = std::getenv(name);
  if (raw == nullptr || *raw == '\0') return;
  const std::string_view text(raw);
  std::uint64_t value = 0;
  const auto [end, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || end != text.data() + text.size() || value == 0) {
    throw std::invalid_argument(std::string(name) + " must be a positive integer, got '" + raw + "'");
  }
  field = value;
}

}  // namespace

Budget Budget::from_environment() {
  Budget b;
  override_from("WORMLAB_MAX_STEPS", b.max_steps);
  override_from("WORMLAB_MAX_BITS", b.max_bits);
  override_from("WORMLAB_MAX_TERM_SIZE", b.max_term_size);
  return b;
}

}  // namespace wormlab
