#ifndef POLYCOORD_ERRORS_HPP
#define POLYCOORD_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace polycoord {

/// Base class of every error raised by the library. `kind()` is the stable,
/// machine-readable name used in CLI error objects.
class Error : public std::runtime_error {
public:
    Error(std::string kind, const std::string &message)
        : std::runtime_error(message), kind_(std::move(kind)) {}

    const std::string &kind() const noexcept { return kind_; }

private:
    std::string kind_;
};

/// Malformed or out-of-range input: bad ids, self-loops, parallel edges,
/// unparsable rationals, wrong profile length.
class InvalidInput : public Error {
public:
    explicit InvalidInput(const std::string &message) : Error("InvalidInput", message) {}
};

class NotAPotentialGame : public Error {
public:
    explicit NotAPotentialGame(const std::string &message) : Error("NotAPotentialGame", message) {}
};

class InstanceTooLarge : public Error {
public:
    explicit InstanceTooLarge(const std::string &message) : Error("InstanceTooLarge", message) {}
};

class PropertyViolated : public Error {
public:
    explicit PropertyViolated(const std::string &message) : Error("PropertyViolated", message) {}
};

class PreconditionViolated : public Error {
public:
    explicit PreconditionViolated(const std::string &message)
        : Error("PreconditionViolated", message) {}
};

class NegativeWeight : public Error {
public:
    explicit NegativeWeight(const std::string &message) : Error("NegativeWeight", message) {}
};

class NotATransversal : public Error {
public:
    explicit NotATransversal(const std::string &message) : Error("NotATransversal", message) {}
};

class NoPureNE : public Error {
public:
    explicit NoPureNE(const std::string &message) : Error("NoPureNE", message) {}
};

class InfiniteCut : public Error {
public:
    explicit InfiniteCut(const std::string &message) : Error("InfiniteCut", message) {}
};

} // namespace polycoord

#endif // POLYCOORD_ERRORS_HPP
