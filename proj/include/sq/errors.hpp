#pragma once

#include <stdexcept>
#include <string>

namespace sq {

// Every failure mode carries one of these tags so callers (and the CLI exit
// code logic) can react without parsing message text.
enum class ErrorKind {
    MalformedInput,
    NotABijection,
    IndexOutOfRange,
    PatternTooLong,
    WindowMismatch,
    WindowTooSmall,
    NTooSmall,
    ShapeMismatch,
    EntryExceedsAmbient,
    LengthDecrease,
    NotSmooth,
    LetterOutOfRange,
    NotCommuting,
    NotABraid,
    WordDoesNotEvaluateToW,
    NotReduced,
    NotCompatible,
    NoSuchFreeVertex,
    BadSandwich,
    BudgetExceeded,
};

inline const char* to_string(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::MalformedInput: return "MalformedInput";
        case ErrorKind::NotABijection: return "NotABijection";
        case ErrorKind::IndexOutOfRange: return "IndexOutOfRange";
        case ErrorKind::PatternTooLong: return "PatternTooLong";
        case ErrorKind::WindowMismatch: return "WindowMismatch";
        case ErrorKind::WindowTooSmall: return "WindowTooSmall";
        case ErrorKind::NTooSmall: return "NTooSmall";
        case ErrorKind::ShapeMismatch: return "ShapeMismatch";
        case ErrorKind::EntryExceedsAmbient: return "EntryExceedsAmbient";
        case ErrorKind::LengthDecrease: return "LengthDecrease";
        case ErrorKind::NotSmooth: return "NotSmooth";
        case ErrorKind::LetterOutOfRange: return "LetterOutOfRange";
        case ErrorKind::NotCommuting: return "NotCommuting";
        case ErrorKind::NotABraid: return "NotABraid";
        case ErrorKind::WordDoesNotEvaluateToW: return "WordDoesNotEvaluateToW";
        case ErrorKind::NotReduced: return "NotReduced";
        case ErrorKind::NotCompatible: return "NotCompatible";
        case ErrorKind::NoSuchFreeVertex: return "NoSuchFreeVertex";
        case ErrorKind::BadSandwich: return "BadSandwich";
        case ErrorKind::BudgetExceeded: return "BudgetExceeded";
    }
    return "UnknownError";
}

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what)
        : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

    ErrorKind kind() const { return kind_; }

private:
    ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& what) {
    throw Error(kind, what);
}

} // namespace sq
