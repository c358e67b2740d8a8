/*   Copyright 2026 The vagueq Authors

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

#include "vagueq/error.hpp"
#include "vagueq/fuzzy_core.hpp"
#include "vagueq/fuzzy_language.hpp"
#include "vagueq/grid_io.hpp"
#include "vagueq/integral.hpp"
#include "vagueq/interval_set.hpp"
#include "vagueq/localize.hpp"
#include "vagueq/measures.hpp"
#include "vagueq/quadrature.hpp"
#include "vagueq/quantum.hpp"
#include "vagueq/text.hpp"
