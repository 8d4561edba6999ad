#pragma once

#include <stdexcept>
#include <string>

namespace arasent {

// Error taxonomy used across the toolkit. The CLI maps any Error to exit
// code 2 (data/config error); usage errors are handled by the flag parser.
enum class ErrorKind {
    Parse,      // malformed input file
    Integrity,  // invariant violation in otherwise well-formed data
    Label,      // unknown polarity label string
    Config,     // invalid configuration value or combination
    Split,      // corpus cannot be split as requested
    Stats,      // summary requested on empty corpus
    Build,      // lexicon builder precondition failure
    Train,      // training precondition failure
    Shape,      // dimension mismatch
    Data,       // non-finite or otherwise unusable numeric data
    Model,      // model file or model/vocabulary mismatch
    Io,         // filesystem failure
    Eval,       // evaluation precondition failure
    Generation, // infeasible synthetic-corpus spec
};

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& message)
        : std::runtime_error(message), kind_(kind) {}

    ErrorKind kind() const { return kind_; }

private:
    ErrorKind kind_;
};

inline const char* error_kind_name(ErrorKind k) {
    switch (k) {
        case ErrorKind::Parse: return "parse";
        case ErrorKind::Integrity: return "integrity";
        case ErrorKind::Label: return "label";
        case ErrorKind::Config: return "config";
        case ErrorKind::Split: return "split";
        case ErrorKind::Stats: return "stats";
        case ErrorKind::Build: return "build";
        case ErrorKind::Train: return "train";
        case ErrorKind::Shape: return "shape";
        case ErrorKind::Data: return "data";
        case ErrorKind::Model: return "model";
        case ErrorKind::Io: return "io";
        case ErrorKind::Eval: return "eval";
        case ErrorKind::Generation: return "generation";
    }
    return "unknown";
}

} // namespace arasent
