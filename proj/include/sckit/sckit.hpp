/*
 * Copyright 2026 The sckit Authors.
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     https://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#pragma once

#include "sckit/baseline.hpp"
#include "sckit/bench.hpp"
#include "sckit/games.hpp"
#include "sckit/group.hpp"
#include "sckit/primitives.hpp"
#include "sckit/random.hpp"
#include "sckit/schnorr.hpp"
#include "sckit/serialization.hpp"
#include "sckit/signcryption.hpp"
