#pragma once

#include <stdexcept>
#include <string>

namespace delaunay {

// Every failure the library reports derives from Error; `kind()` is a short
// stable token used by the CLI's one-line diagnostics.
class Error : public std::runtime_error {
public:
    Error(std::string kind, const std::string& message)
        : std::runtime_error(message), kind_(std::move(kind)) {}
    const std::string& kind() const noexcept { return kind_; }

private:
    std::string kind_;
};

struct DomainError : Error {
    explicit DomainError(const std::string& m) : Error("domain", m) {}
};

struct RangeError : Error {
    explicit RangeError(const std::string& m) : Error("range", m) {}
};

struct DegeneratePointError : Error {
    explicit DegeneratePointError(const std::string& m) : Error("degenerate-point", m) {}
};

struct ConvergenceError : Error {
    explicit ConvergenceError(const std::string& m) : Error("convergence", m) {}
};

struct NoBracketError : Error {
    explicit NoBracketError(const std::string& m) : Error("no-bracket", m) {}
};

struct PatchMismatchError : Error {
    explicit PatchMismatchError(const std::string& m) : Error("patch-mismatch", m) {}
};

struct QuadratureError : Error {
    explicit QuadratureError(const std::string& m) : Error("quadrature", m) {}
};

struct NotClosedError : Error {
    explicit NotClosedError(const std::string& m) : Error("not-closed", m) {}
};

}  // namespace delaunay
