// Copyright 2026 The shapecode Authors
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

namespace shapecode {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A caller violated an operation's precondition (e.g. empty stroke).
class PreconditionError : public Error {
public:
    using Error::Error;
};

/// Too few or collinear points for the requested fit.
class DegenerateInput : public Error {
public:
    using Error::Error;
};

/// The solver produced no admissible solution.
class NumericalFailure : public Error {
public:
    using Error::Error;
};

/// Malformed image, config, or code document.
class ParseError : public Error {
public:
    using Error::Error;
};

/// Corpus directory is missing or holds no usable rasters.
class CorpusError : public Error {
public:
    using Error::Error;
};

/// Codebook file could not be read or has the wrong schema.
class CodebookError : public Error {
public:
    using Error::Error;
};

}  // namespace shapecode
