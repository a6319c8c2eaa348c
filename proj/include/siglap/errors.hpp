#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace siglap {

/** Base class of every error raised by the library. */
class Error : public std::runtime_error
{
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/** Empty vectors, zero-sized matrices, zero vectors where a nonzero one is needed. */
class IllFormedInput : public Error
{
public:
    explicit IllFormedInput(const std::string& what) : Error(what) {}
};

class DimensionError : public Error
{
public:
    explicit DimensionError(const std::string& what) : Error(what) {}
};

/** Edge-list syntax or graph-invariant violation, tagged with a 1-based line number (0 if unknown). */
class ParseError : public Error
{
public:
    ParseError(std::size_t line, const std::string& what)
        : Error(line ? "line " + std::to_string(line) + ": " + what : what), line_(line)
    {}

    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

/** D is singular: the graph has an isolated vertex. */
class DegenerateInput : public Error
{
public:
    explicit DegenerateInput(const std::string& what) : Error(what) {}
};

/** The graph is outside the hypotheses an operation requires (connected, non-bipartite, bicyclic). */
class HypothesisViolation : public Error
{
public:
    explicit HypothesisViolation(const std::string& what) : Error(what) {}
};

class InfeasibleError : public Error
{
public:
    explicit InfeasibleError(const std::string& what) : Error(what) {}
};

class InvalidParameter : public Error
{
public:
    explicit InvalidParameter(const std::string& what) : Error(what) {}
};

/** A computed certificate failed its exact re-check. Always an implementation bug. */
class ConstructionMismatch : public Error
{
public:
    explicit ConstructionMismatch(const std::string& what) : Error(what) {}
};

}  // namespace siglap
