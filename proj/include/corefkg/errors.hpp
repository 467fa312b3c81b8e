#pragma once

#include <stdexcept>
#include <string>

namespace corefkg {

// Error families map to CLI exit codes: config=2, transport/LLM=3, validation=4.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Bad configuration: unknown entity type, chunk_size <= overlap, missing template dir, ...
class ConfigError : public Error {
public:
    using Error::Error;
};

// Network failures, timeouts, and LLM output that never becomes usable.
class TransportError : public Error {
public:
    using Error::Error;
};

// Replay backend has no entry for the requested fingerprint.
class FixtureMissError : public TransportError {
public:
    using TransportError::TransportError;
};

// LLM output could not be parsed even after repair and re-ask attempts.
class ParseError : public TransportError {
public:
    using TransportError::TransportError;
};

// Structured output parsed but violates the expected schema.
class SchemaError : public Error {
public:
    using Error::Error;
};

// A domain invariant or precondition was violated.
class ValidationError : public Error {
public:
    using Error::Error;
};

// Overlap-merge could not locate an anchor run; callers fall back to overlap-0 chunking.
class AnchorError : public ValidationError {
public:
    using ValidationError::ValidationError;
};

}  // namespace corefkg
