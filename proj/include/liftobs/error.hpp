#pragma once

#include <stdexcept>
#include <string>

namespace liftobs {

/** Error category, mapped to CLI exit codes (input -> 2, internal -> 3). */
enum class ErrKind { Input, Internal };

class Error : public std::runtime_error {
public:
    Error(ErrKind kind, std::string msg) : std::runtime_error(std::move(msg)), kind_(kind) {}
    ErrKind kind() const { return kind_; }

private:
    ErrKind kind_;
};

inline Error input_error(std::string msg) { return Error(ErrKind::Input, std::move(msg)); }
inline Error internal_error(std::string msg) { return Error(ErrKind::Internal, std::move(msg)); }

// Invariant breach: throws an internal error. Used where a violated condition means
// a bug in this library rather than bad user input.
inline void require_internal(bool cond, const char* what) {
    if (!cond) throw internal_error(std::string("internal invariant breach: ") + what);
}

inline void require_input(bool cond, const std::string& what) {
    if (!cond) throw input_error(what);
}

} // namespace liftobs
