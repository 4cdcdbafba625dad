#ifndef GRIDROOTS_ERRORS_HPP
#define GRIDROOTS_ERRORS_HPP

#include <stdexcept>
#include <string>
#include <utility>

namespace gridroots {

// Every failure carries a stable machine-readable code string next to the
// human-readable message. The CLI maps codes to exit statuses.
class Error : public std::runtime_error {
  public:
    Error(std::string code, const std::string& message)
        : std::runtime_error(code + ": " + message), code_(std::move(code)) {}

    const std::string& code() const noexcept { return code_; }

  private:
    std::string code_;
};

// Violation of an internal cross-check (oracle disagreement, broken
// postcondition). Distinct type so callers can map it to "defect", not
// "bad input".
class InternalCheckError : public Error {
  public:
    explicit InternalCheckError(const std::string& message) : Error("InternalCheck", message) {}
};

[[noreturn]] inline void fail(std::string code, const std::string& message) {
    throw Error(std::move(code), message);
}

inline void internal_check(bool ok, const std::string& message) {
    if (!ok) throw InternalCheckError(message);
}

}  // namespace gridroots

#endif
