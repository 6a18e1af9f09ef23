// Copyright 2026 The qneuron Authors
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
#include <utility>

namespace qneuron {

/**
 * Input or precondition violation raised by any module. The module name is
 * carried so the command-line front end can report where the check failed.
 */
class ValidationError : public std::invalid_argument {
 public:
  ValidationError(std::string module, const std::string &what)
      : std::invalid_argument(what), module_(std::move(module)) {}

  const std::string &module() const noexcept { return module_; }

 private:
  std::string module_;
};

}  // namespace qneuron
