// Copyright 2026 The floq_otoc Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef FLOQ_ERROR_HPP
#define FLOQ_ERROR_HPP

#include <stdexcept>
#include <string>

namespace floq {

/// Base class of every exception thrown by floq_otoc.
class Error : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

/// Invalid physical or request parameters (site out of range, N above the cap, ...).
class ConfigError : public Error {
   public:
    using Error::Error;
};

/// Two state vectors (or a state and a map) disagree on the number of sites.
class DimensionError : public Error {
   public:
    using Error::Error;
};

/// A closed-form quantity left its real domain, e.g. |cos γ_q| > 1.
class DomainError : public Error {
   public:
    using Error::Error;
};

/// The request is outside what a tabulated or closed-form routine covers.
class UnsupportedError : public Error {
   public:
    using Error::Error;
};

/// A fit was asked for with too few points.
class InsufficientDataError : public Error {
   public:
    using Error::Error;
};

/// A log-log fit met a non-positive value.
class FitDomainError : public Error {
   public:
    using Error::Error;
};

}  // namespace floq

#endif  // FLOQ_ERROR_HPP
