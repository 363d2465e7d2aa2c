#include "contentmax/parallel.hpp"

#include <charconv>
#include <cstdlib>
#include <string_view>

namespace contentmax {

std::size_t configured_threads() {
    const char* raw = std::getenv("CONTENTMAX_THREADS");
    if (raw == nullptr) return 1;
    const std::string_view text(raw);
    std::size_t value = 0;
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc{} || ptr != text.data() + text.size() || value == 0) return 1;
    return value;
}

}  // namespace contentmax
