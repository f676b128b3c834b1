#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace trackgrid {

// A transform that is not defined for one of the input cells (out-of-range
// target index, underflow below track 1, ...). Carries the offending cell.
class TransformUndefinedError : public std::domain_error {
public:
    TransformUndefinedError(std::string what, int track, std::int64_t area)
        : std::domain_error(std::move(what)), track_(track), area_(area) {}

    int track() const { return track_; }
    std::int64_t area() const { return area_; }

private:
    int track_;
    std::int64_t area_;
};

// Malformed input data; `line` is 1-based, 0 when unknown.
class DatasetParseError : public std::runtime_error {
public:
    DatasetParseError(std::string what, std::size_t line)
        : std::runtime_error(std::move(what)), line_(line) {}

    std::size_t line() const { return line_; }

private:
    std::size_t line_;
};

// Curve evaluator produced a non-finite value.
class CurveEvalError : public std::runtime_error {
public:
    CurveEvalError(std::string what, double x, double y)
        : std::runtime_error(std::move(what)), x_(x), y_(y) {}

    double x() const { return x_; }
    double y() const { return y_; }

private:
    double x_;
    double y_;
};

// Structural invariant violation while assembling the component tree.
class StructureError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace trackgrid
