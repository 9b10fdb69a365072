/*
 * Copyright 2026 The hlcd Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *   http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */
#pragma once
#pragma once

#include "hlcd/analysis.hpp"
#include "hlcd/bounds.hpp"
#include "hlcd/code.hpp"
#include "hlcd/enumerator.hpp"
#include "hlcd/error.hpp"
#include "hlcd/gf4.hpp"
#include "hlcd/matrix.hpp"
#include "hlcd/qmat.hpp"
#include "hlcd/recipe.hpp"
#include "hlcd/tables.hpp"
#include "hlcd/verify.hpp"
