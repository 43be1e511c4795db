/*
   Copyright 2026 The aggfuzz Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

       http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#pragma once

#include <stdexcept>
#include <string>

namespace aggfuzz {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

#define AGGFUZZ_DEFINE_ERROR(name)          \
  class name : public Error {               \
   public:                                  \
    using Error::Error;                     \
  }

AGGFUZZ_DEFINE_ERROR(RangeError);
AGGFUZZ_DEFINE_ERROR(UnknownName);
AGGFUZZ_DEFINE_ERROR(MonotonicityViolation);
AGGFUZZ_DEFINE_ERROR(NotATNorm);
AGGFUZZ_DEFINE_ERROR(NotADisjunctor);
AGGFUZZ_DEFINE_ERROR(NotACopula);
AGGFUZZ_DEFINE_ERROR(InvalidGenerator);
AGGFUZZ_DEFINE_ERROR(ConditionViolated);
AGGFUZZ_DEFINE_ERROR(UniverseMismatch);
AGGFUZZ_DEFINE_ERROR(DimensionMismatch);
AGGFUZZ_DEFINE_ERROR(ArityMismatch);
AGGFUZZ_DEFINE_ERROR(BadScheme);
AGGFUZZ_DEFINE_ERROR(ParseError);
AGGFUZZ_DEFINE_ERROR(UnresolvedReference);

#undef AGGFUZZ_DEFINE_ERROR

}  // namespace aggfuzz
