#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace ecdg {

/// Malformed arguments or files: bad vertex ids, loops, out-of-range colours.
class InputError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// An operation was called outside its precondition (e.g. a cyclic "acyclic" subgraph).
/// `witness` holds a directed cycle, first vertex repeated at the end, when one is known.
class PreconditionError : public std::logic_error {
public:
    PreconditionError(const std::string& what, std::vector<std::uint32_t> witness = {})
        : std::logic_error(what), witness_(std::move(witness)) {}

    const std::vector<std::uint32_t>& witness() const noexcept { return witness_; }

private:
    std::vector<std::uint32_t> witness_;
};

/// The path-length hypothesis failed: there is a directed path of length `length`
/// in colour `colour`; the offending path is `witness`.
class HypothesisError : public std::runtime_error {
public:
    HypothesisError(const std::string& what, std::uint32_t colour, int length,
                    std::vector<std::uint32_t> witness)
        : std::runtime_error(what), colour_(colour), length_(length), witness_(std::move(witness)) {}

    std::uint32_t colour() const noexcept { return colour_; }
    int length() const noexcept { return length_; }
    const std::vector<std::uint32_t>& witness() const noexcept { return witness_; }

private:
    std::uint32_t colour_;
    int length_;
    std::vector<std::uint32_t> witness_;
};

/// An exact search refused an instance larger than its cap.
class ScaleError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A produced certificate failed its own check. Always a bug, never an input problem.
class CertificateError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

}  // namespace ecdg
