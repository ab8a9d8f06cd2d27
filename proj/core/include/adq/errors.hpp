#ifndef ADQ_ERRORS_HPP
#define ADQ_ERRORS_HPP

#include <cstdint>
#include <stdexcept>
#include <string>

namespace adq {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Bad parameters (non-prime p, a >= p, malformed root data, mixed field
// contexts, ...). The CLI maps this to exit code 2.
struct InvalidInput : Error {
  using Error::Error;
};

// A configured resource cap was hit (group order, field size, memory,
// relator budget). The CLI maps an undetermined verdict to exit code 3.
struct CapExceeded : Error {
  explicit CapExceeded(const std::string& msg, std::uint64_t partial_count = 0)
      : Error(msg), partial(partial_count) {}
  // How far the computation got before hitting the cap (e.g. number of
  // group elements discovered).
  std::uint64_t partial;
};

}  // namespace adq

#endif
