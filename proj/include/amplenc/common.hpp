// Copyright 2026 The amplenc Authors
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

#pragma once

#include <complex>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace amplenc {

using Complex = std::complex<double>;
using QubitId = unsigned;
using Index = std::uint64_t;

/// Numerical tolerances shared by the simulator, the analysis oracles and the
/// test suites. Changing one of these changes what "exact" means everywhere.
namespace tol {
inline constexpr double kUnitarity = 1e-12;
inline constexpr double kLeakage = 1e-12;
inline constexpr double kOracle = 1e-10;
inline constexpr double kZeroSuccess = 1e-15;
}  // namespace tol

/// Caller handed us something outside an operation's domain.
class InputError : public std::invalid_argument {
   public:
    using std::invalid_argument::invalid_argument;
};

/// Every value in the data set is zero, so no rotation scale exists.
class AllZeroDataError : public InputError {
   public:
    AllZeroDataError() : InputError("all-zero data set") {}
};

/// Post-selection on the flag cannot succeed.
class ZeroSuccessError : public std::runtime_error {
   public:
    ZeroSuccessError() : std::runtime_error("zero success probability") {}
};

/// Parity/compression ancillas still carry weight outside |0...0>.
class AncillaEntangledError : public std::runtime_error {
   public:
    explicit AncillaEntangledError(double leakage)
        : std::runtime_error("ancillae entangled (leakage " + std::to_string(leakage) + ")"),
          leakage_(leakage) {}
    double leakage() const { return leakage_; }

   private:
    double leakage_;
};

/// A circuit construction request that cannot be satisfied, e.g. too few ancillas.
class ConfigurationError : public std::logic_error {
   public:
    using std::logic_error::logic_error;
};

}  // namespace amplenc
