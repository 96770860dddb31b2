#ifndef GKM_ERRORS_HPP
#define GKM_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace gkm {

// A space specification the user handed us is malformed or out of range.
struct spec_error : std::runtime_error {
  explicit spec_error(const std::string &msg) : std::runtime_error(msg) {}
};

// A mathematical invariant the library guarantees was violated; this is a
// bug (corrupted root data, oracle disagreement) and is never ignored.
struct invariant_error : std::runtime_error {
  explicit invariant_error(const std::string &msg) : std::runtime_error(msg) {}
};

}  // namespace gkm

#endif
