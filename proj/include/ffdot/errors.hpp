// Copyright 2026 The ffdot Authors.
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

namespace ffdot {

/// Base class of every error thrown by this library.
struct Error : std::runtime_error {
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

#define FFDOT_ERROR_TYPE(Name)                            \
  struct Name : Error {                                   \
    explicit Name(const std::string& msg) : Error(msg) {} \
  }

FFDOT_ERROR_TYPE(NotPrimeError);
FFDOT_ERROR_TYPE(DegreeOutOfRangeError);
FFDOT_ERROR_TYPE(CapExceededError);
FFDOT_ERROR_TYPE(FieldMismatchError);
FFDOT_ERROR_TYPE(DivisionByZeroError);
FFDOT_ERROR_TYPE(DimensionMismatchError);
FFDOT_ERROR_TYPE(EmptyQueryError);
FFDOT_ERROR_TYPE(DisconnectedError);
FFDOT_ERROR_TYPE(ArityError);
FFDOT_ERROR_TYPE(PrefixNotInProjectionError);
FFDOT_ERROR_TYPE(OrderMismatchError);
FFDOT_ERROR_TYPE(NotRationalError);
FFDOT_ERROR_TYPE(AlphaZeroError);
FFDOT_ERROR_TYPE(NotATreeError);
FFDOT_ERROR_TYPE(EmptyComponentError);
FFDOT_ERROR_TYPE(EmptyProjectionError);
FFDOT_ERROR_TYPE(ParseError);

#undef FFDOT_ERROR_TYPE

}  // namespace ffdot
