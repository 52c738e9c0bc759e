/*
   Copyright 2026 the carlitz authors

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

#ifndef CARLITZ_CARLITZ_HPP
#define CARLITZ_CARLITZ_HPP

#include "carlitz/chain.hpp"
#include "carlitz/field.hpp"
#include "carlitz/perm.hpp"
#include "carlitz/poly.hpp"
#include "carlitz/rank3.hpp"
#include "carlitz/selftest.hpp"
#include "carlitz/sweep.hpp"

#endif
