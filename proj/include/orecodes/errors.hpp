#ifndef ORECODES_ERRORS_HPP
#define ORECODES_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace orecodes {

// Error categories. The numeric values double as CLI exit codes and as the
// C API status codes, so keep them stable.
enum class errc : int {
    verification_failure = 1,
    invalid_argument = 2,
    precondition = 3,
    budget_exceeded = 4,
    internal = 5,
};

class Error : public std::runtime_error {
   public:
    Error(errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
    errc code() const noexcept { return code_; }

   private:
    errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& msg) { throw Error(code, msg); }

// Shorthands for the most common categories.
[[noreturn]] inline void fail_invalid(const std::string& msg) { fail(errc::invalid_argument, msg); }
[[noreturn]] inline void fail_precond(const std::string& msg) { fail(errc::precondition, msg); }
[[noreturn]] inline void fail_internal(const std::string& msg) { fail(errc::internal, msg); }

// Internal consistency checks that hold for every valid input; failures
// indicate a bug, not a user error.
inline void require_internal(bool cond, const char* msg) {
    if (!cond) fail_internal(msg);
}

}  // namespace orecodes

#endif
