#pragma once

#include <stdexcept>
#include <string>

namespace linkhel {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A precondition on sizes or parameters was violated (grid size, sample count, ...).
class InvalidArgument : public Error {
public:
    using Error::Error;
};

/// Base for inputs that are well-formed but geometrically unusable.
class DegenerateInput : public Error {
public:
    using Error::Error;
};

class PoleTooClose : public DegenerateInput {
public:
    using DegenerateInput::DegenerateInput;
};

class DegenerateCurve : public DegenerateInput {
public:
    using DegenerateInput::DegenerateInput;
};

/// Two link components come closer than the separation threshold.
class ComponentsTooClose : public DegenerateInput {
public:
    using DegenerateInput::DegenerateInput;
};

class CurvesTooClose : public DegenerateInput {
public:
    using DegenerateInput::DegenerateInput;
};

/// ||F|| fell below the threshold, i.e. two components nearly touch.
class NearDegenerateTriple : public DegenerateInput {
public:
    using DegenerateInput::DegenerateInput;
};

/// A degree integral is too far from an integer to be trusted.
class DegenerateDegree : public DegenerateInput {
public:
    DegenerateDegree(const std::string& what, double raw) : DegenerateInput(what), raw_(raw) {}
    double raw() const noexcept { return raw_; }

private:
    double raw_;
};

class GridTooLarge : public Error {
public:
    using Error::Error;
};

/// The triple linking formula only applies when all pairwise linking numbers vanish.
class NonzeroLinking : public Error {
public:
    NonzeroLinking(int p, int q, int r)
        : Error("pairwise linking nonzero: (p, q, r) = (" + std::to_string(p) + ", " +
                std::to_string(q) + ", " + std::to_string(r) +
                "); the triple linking integral requires p = q = r = 0"),
          p_(p), q_(q), r_(r) {}
    int p() const noexcept { return p_; }
    int q() const noexcept { return q_; }
    int r() const noexcept { return r_; }

private:
    int p_, q_, r_;
};

/// Malformed link document or command input.
class ParseError : public Error {
public:
    using Error::Error;
};

}  // namespace linkhel
