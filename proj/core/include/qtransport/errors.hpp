// Copyright 2026 The qtransport Authors.
//
//    Licensed under the Apache License, Version 2.0 (the "License");
//    you may not use this file except in compliance with the License.
//    You may obtain a copy of the License at
//
//        http://www.apache.org/licenses/LICENSE-2.0
//
//    Unless required by applicable law or agreed to in writing, software
//    distributed under the License is distributed on an "AS IS" BASIS,
//    WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
//    See the License for the specific language governing permissions and
//    limitations under the License.

#pragma once

#include <stdexcept>
#include <string>

namespace qtransport {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
    using std::runtime_error::runtime_error;
};

/// Lengths or variable counts disagree (assignment vs model, state vs cost).
class DimensionError : public Error {
 public:
    using Error::Error;
};

/// A numeric parameter is outside its admissible range (penalty weight,
/// schedule, problem size, ...).
class ParameterError : public Error {
 public:
    using Error::Error;
};

/// A value lies outside the mathematical domain of the operation (spin not
/// +-1, negative queue, non-permutation tour).
class DomainError : public Error {
 public:
    using Error::Error;
};

/// A configured cap would be exceeded (enumeration or statevector size).
class ResourceError : public Error {
 public:
    using Error::Error;
};

/// The requested quantity does not exist for the given inputs, e.g. a
/// time-to-solution with zero observed successes.
class UndefinedResultError : public Error {
 public:
    using Error::Error;
};

/// A JSON or CSV document is malformed. The message names the offending field.
class FormatError : public Error {
 public:
    using Error::Error;
};

}  // namespace qtransport
