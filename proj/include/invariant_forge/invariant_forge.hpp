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

#ifndef INVARIANT_FORGE_INVARIANT_FORGE_HPP
#define INVARIANT_FORGE_INVARIANT_FORGE_HPP

#include "actions.hpp"
#include "binomial.hpp"
#include "errors.hpp"
#include "field.hpp"
#include "invariants.hpp"
#include "linalg.hpp"
#include "molien.hpp"
#include "polynomial.hpp"
#include "richman.hpp"

#endif
