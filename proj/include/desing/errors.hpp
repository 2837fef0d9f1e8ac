/*
   Copyright 2026 The desing Authors

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

#ifndef DESING_ERRORS_HPP
#define DESING_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace desing {

/// Root of every error raised by the library.
class Error : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

/// An operation was asked for something meaningless, e.g. gcd(0, 0).
class DegenerateInput : public Error {
   public:
    using Error::Error;
};

class DivisionByZero : public Error {
   public:
    using Error::Error;
};

/// A rational function has a pole at the modulus it is being reduced by.
class NotInLocalRing : public Error {
   public:
    using Error::Error;
};

/// Modulus is not monic, constant, or not squarefree.
class InvalidModulus : public Error {
   public:
    using Error::Error;
};

class SingularMatrix : public Error {
   public:
    using Error::Error;
};

/// The polynomial handed to a pole-level operation does not divide den(A).
class NotAPole : public Error {
   public:
    using Error::Error;
};

/// A documented precondition of an algorithm was violated by the caller.
class UsageError : public Error {
   public:
    using Error::Error;
};

/// Malformed expression or document. `position` is 1-based, 0 when unknown.
class ParseError : public Error {
   public:
    ParseError(const std::string& what, std::size_t position = 0)
        : Error(position == 0 ? what : what + " at position " + std::to_string(position)),
          position_(position) {}
    std::size_t position() const noexcept { return position_; }

   private:
    std::size_t position_;
};

}  // namespace desing

#endif  // DESING_ERRORS_HPP
