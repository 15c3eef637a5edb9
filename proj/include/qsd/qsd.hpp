// Copyright 2026 The qsd authors
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

#include "qsd/analytic.hpp"
#include "qsd/format.hpp"
#include "qsd/instrument.hpp"
#include "qsd/montecarlo.hpp"
#include "qsd/nelder_mead.hpp"
#include "qsd/oracle.hpp"
#include "qsd/qmath.hpp"
#include "qsd/rng.hpp"
#include "qsd/schemes.hpp"
