#pragma once

#include <stdexcept>
#include <string>

namespace autgram {

/// Malformed text input (edge lists, permutations, words, .td, .lp, grammar JSON).
class ParseError : public std::runtime_error {
public:
    enum class Kind { Malformed, SelfLoop, DuplicateEdge, OutOfRange };

    ParseError(Kind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}

    Kind kind() const noexcept { return kind_; }

private:
    Kind kind_;
};

/// A pipeline precondition does not hold for the given input: disconnected graph,
/// prefix not invariant under Aut, graph above an enumeration cap.
class PreconditionError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// An internal certificate failed; indicates a bug rather than bad input.
class SoundnessError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

}  // namespace autgram
