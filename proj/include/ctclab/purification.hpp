// Copyright 2026 The ctc-lab Authors
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

#include "ctclab/purification/json.hpp"
#include "ctclab/purification/probe.hpp"
#include "ctclab/purification/purify.hpp"
#include "ctclab/purification/recursion.hpp"
#include "ctclab/purification/sources.hpp"
#include "ctclab/purification/special.hpp"
#include "ctclab/purification/swap_entanglement.hpp"
