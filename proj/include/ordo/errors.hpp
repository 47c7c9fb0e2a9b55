#ifndef ordo_errors_hpp
#define ordo_errors_hpp

#include <stdexcept>
#include <string>

namespace ordo {

// Refusal to run a computation whose cost guard is exceeded (e.g. the
// factorial Kemeny search on a large universe).
struct GuardError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

} // namespace ordo

#endif
