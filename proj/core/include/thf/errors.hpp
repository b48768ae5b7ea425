#ifndef THF_ERRORS_HPP
#define THF_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace thf {

// Base class for everything this library throws on purpose.
struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Malformed textual input: dyadics, words, normal forms, JSON payloads.
struct ParseError : Error {
    explicit ParseError(const std::string& what) : Error(what) {}
};

// A structural invariant of a map or word failed to hold.  Raised by
// validating constructors, never by internal arithmetic.
struct InvariantError : Error {
    explicit InvariantError(const std::string& what) : Error(what) {}
};

// A configured resource cap (breakpoint count, word count) was hit before
// the computation finished.  The partial result is discarded.
struct CapExceeded : Error {
    explicit CapExceeded(const std::string& what) : Error(what) {}
};

// A family was asked for a member outside its domain of definition.
struct HypothesisError : Error {
    explicit HypothesisError(const std::string& what) : Error(what) {}
};

// A deterministic search ran out of candidates.  Carries the input that
// could not be satisfied so callers can report it.
struct PoolExhausted : Error {
    explicit PoolExhausted(const std::string& what) : Error(what) {}
};

namespace detail {
[[noreturn]] inline void check_failed(const char* expr, const char* file, int line) {
    throw Error(std::string("internal check failed: ") + expr + " at " + file + ":" + std::to_string(line));
}
}  // namespace detail

// Internal tripwire.  These fire only on library bugs, so they stay on in
// release builds.
#define THF_CHECK(expr) \
    do { if (!(expr)) ::thf::detail::check_failed(#expr, __FILE__, __LINE__); } while (0)

}  // namespace thf

#endif
