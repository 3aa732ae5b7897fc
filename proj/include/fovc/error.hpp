// Copyright 2026 The fovcodec Authors.
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

#include <cstddef>
#include <stdexcept>
#include <string>

namespace fovc {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A caller broke a documented precondition.
class ContractViolation : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

class UnsupportedFormat : public Error {
 public:
  using Error::Error;
};

class TruncatedStream : public Error {
 public:
  using Error::Error;
};

class IoError : public Error {
 public:
  using Error::Error;
};

class ConfigError : public Error {
 public:
  using Error::Error;
};

/// Malformed coded data. Carries the byte offset at which decoding failed.
class BitstreamError : public Error {
 public:
  BitstreamError(const std::string& what, std::size_t byte_offset)
      : Error(what + " (at byte offset " + std::to_string(byte_offset) + ")"),
        byte_offset_(byte_offset) {}

  std::size_t byte_offset() const noexcept { return byte_offset_; }

 private:
  std::size_t byte_offset_;
};

class UnsupportedVersion : public BitstreamError {
 public:
  UnsupportedVersion(unsigned version, std::size_t byte_offset)
      : BitstreamError("unsupported bitstream version " + std::to_string(version), byte_offset),
        version_(version) {}

  unsigned version() const noexcept { return version_; }

 private:
  unsigned version_;
};

#define FOVC_REQUIRE(cond, msg)                    \
  do {                                             \
    if (!(cond)) throw ::fovc::ContractViolation(msg); \
  } while (0)

}  // namespace fovc
