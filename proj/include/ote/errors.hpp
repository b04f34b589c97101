// Copyright 2026 The ote-otto Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// errors.hpp - exception hierarchy shared by all modules

#pragma once

#include <stdexcept>
#include <string>

namespace ote {

/// Broad failure category; the CLI maps it onto its exit code.
enum class ErrorKind { config = 1, numerical = 2, io = 3 };

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

class ConfigError : public Error {
public:
    explicit ConfigError(const std::string& what) : Error(ErrorKind::config, what) {}
};

class IoError : public Error {
public:
    explicit IoError(const std::string& what) : Error(ErrorKind::io, what) {}
};

class NumericalError : public Error {
public:
    explicit NumericalError(const std::string& what) : Error(ErrorKind::numerical, what) {}
};

/// A tabulated permittivity was queried outside its frequency grid.
class OutOfRangeError : public NumericalError {
public:
    using NumericalError::NumericalError;
};

/// Slab multiple-reflection denominator vanished (lossless Fabry-Perot pole).
class DegeneracyError : public NumericalError {
public:
    using NumericalError::NumericalError;
};

class ConvergenceError : public NumericalError {
public:
    ConvergenceError(const std::string& what, double error_estimate)
        : NumericalError(what), error_estimate_(error_estimate) {}
    double error_estimate() const noexcept { return error_estimate_; }

private:
    double error_estimate_;
};

/// Rates with gamma_plus <= gamma_minus cannot be mapped onto a temperature.
class InvertedRatesError : public NumericalError {
public:
    using NumericalError::NumericalError;
};

class GeometryError : public NumericalError {
public:
    using NumericalError::NumericalError;
};

class ResonanceError : public NumericalError {
public:
    using NumericalError::NumericalError;
};

class DimensionError : public NumericalError {
public:
    using NumericalError::NumericalError;
};

class DegenerateSteadyStateError : public NumericalError {
public:
    DegenerateSteadyStateError(const std::string& what, int kernel_dimension)
        : NumericalError(what), kernel_dimension_(kernel_dimension) {}
    int kernel_dimension() const noexcept { return kernel_dimension_; }

private:
    int kernel_dimension_;
};

class StiffnessError : public NumericalError {
public:
    StiffnessError(const std::string& what, double time) : NumericalError(what), time_(time) {}
    double time() const noexcept { return time_; }

private:
    double time_;
};

/// An emitted state broke a density-matrix invariant (trace drift, positivity).
class InvalidStateError : public NumericalError {
public:
    using NumericalError::NumericalError;
};

class NonGibbsStateError : public NumericalError {
public:
    NonGibbsStateError(const std::string& what, double coherence)
        : NumericalError(what), coherence_(coherence) {}
    double coherence() const noexcept { return coherence_; }

private:
    double coherence_;
};

} // namespace ote
