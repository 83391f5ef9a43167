// Copyright 2026 The ishm Authors
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

#pragma once

#include <stdexcept>
#include <string>

namespace ishm {

/// Base class for all ishm errors.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct IoError : Error {
    using Error::Error;
};

/// Malformed input file or record (carries the offending run when known).
struct FormatError : Error {
    using Error::Error;
};

struct ParamError : Error {
    using Error::Error;
};

struct ShapeError : Error {
    using Error::Error;
};

struct KeyError : Error {
    using Error::Error;
};

struct DataError : Error {
    using Error::Error;
};

struct TrainError : Error {
    using Error::Error;
};

struct NumericError : Error {
    using Error::Error;
};

struct NoDataError : Error {
    using Error::Error;
};

struct ConfigError : Error {
    using Error::Error;
};

}  // namespace ishm
