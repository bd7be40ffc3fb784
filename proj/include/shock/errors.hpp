#pragma once

#include <stdexcept>
#include <string>

namespace shock {

/// Base class for every error raised by this library.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

/// Invalid parameter passed to a generator or constructor.
class ParameterError : public Error {
public:
    using Error::Error;
};

/// Time column of an input file is not uniformly sampled.
class SamplingError : public Error {
public:
    using Error::Error;
};

/// Input file contains rows that do not parse as numbers.
class ParseError : public Error {
public:
    using Error::Error;
};

/// Input file holds no data rows.
class EmptyInput : public Error {
public:
    using Error::Error;
};

/// Pulse duration too short for the requested sample interval.
class ResolutionError : public Error {
public:
    using Error::Error;
};

/// Requested frequency too close to (or beyond) the Nyquist limit.
class AliasError : public Error {
public:
    using Error::Error;
};

/// File could not be read or written.
class IoError : public Error {
public:
    using Error::Error;
};

/// Matrix is all-zero or otherwise unusable for decomposition.
class DegenerateInput : public Error {
public:
    using Error::Error;
};

/// Two spectra were combined over different frequency grids.
class GridError : public Error {
public:
    using Error::Error;
};

/// A modal frequency falls outside the oscillator grid.
class RangeError : public Error {
public:
    using Error::Error;
};

} // namespace shock
