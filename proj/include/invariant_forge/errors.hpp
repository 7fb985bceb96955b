/*
   Copyright 2026 The invariant-forge authors

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

#ifndef INVARIANT_FORGE_ERRORS_HPP
#define INVARIANT_FORGE_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace invariant_forge {

struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// A FieldSpec was constructed from invalid data (composite "prime", N <= 0, ...).
struct invalid_field_error : error {
    using error::error;
};

/// Two scalars (or a scalar and a polynomial) from different fields were combined.
struct field_mismatch_error : error {
    using error::error;
};

/// A documented precondition of an operation was violated.
struct precondition_error : error {
    using error::error;
};

/// Reynolds averaging requested for a group whose order vanishes in the field.
struct not_linearly_reductive_error : error {
    using error::error;
};

/// The diagonal and permutation parts of a product action do not commute.
struct invalid_product_error : error {
    using error::error;
};

/// A configured resource cap (group size, degree, monomial space) was exceeded.
struct resource_cap_error : error {
    using error::error;
};

/// Requested method does not apply to the given action (e.g. charsum for alpha).
struct inapplicable_error : error {
    using error::error;
};

} // namespace invariant_forge

#endif
