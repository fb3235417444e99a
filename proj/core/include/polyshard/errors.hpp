/*
   Copyright 2026 The polyshard-lab Authors

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

#ifndef POLYSHARD_ERRORS_HPP
#define POLYSHARD_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace polyshard {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Two interpolation points share an x coordinate.
class DuplicateAbscissa : public Error {
 public:
  using Error::Error;
};

/// A composed verification polynomial exceeds d(K-1).
class DegreeOverflow : public Error {
 public:
  using Error::Error;
};

/// Too few present evaluations for the requested degree and error radius.
class InsufficientEvaluations : public Error {
 public:
  using Error::Error;
};

/// The balanced version assignment cannot keep every cell within its cap.
class InfeasiblePartition : public Error {
 public:
  using Error::Error;
};

class ConfigError : public Error {
 public:
  using Error::Error;
};

}  // namespace polyshard

#endif  // POLYSHARD_ERRORS_HPP
