/*
   Copyright 2026 The secretgame Authors

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

#ifndef SECRETGAME_SECRETGAME_HPP
#define SECRETGAME_SECRETGAME_HPP

#include "bigint.hpp"
#include "core.hpp"
#include "enumeration.hpp"
#include "error.hpp"
#include "json_codec.hpp"
#include "numtheory.hpp"
#include "quantifier_lab.hpp"
#include "service.hpp"
#include "solvers.hpp"

#endif  // SECRETGAME_SECRETGAME_HPP
