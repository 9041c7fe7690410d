/*
   Copyright 2026 The ptri Authors

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

#ifndef PTRI_PTRI_HPP
#define PTRI_PTRI_HPP

#include "construction.hpp"
#include "error.hpp"
#include "fa.hpp"
#include "gf.hpp"
#include "parallel.hpp"
#include "planar.hpp"
#include "poly.hpp"
#include "verify.hpp"

#endif  // PTRI_PTRI_HPP
