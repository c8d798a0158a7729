// Copyright 2026 The simgame Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
#ifndef SIMGAME_SIMGAME_HPP_
#define SIMGAME_SIMGAME_HPP_

#include "simgame/analysis.hpp"
#include "simgame/corpus.hpp"
#include "simgame/deviation.hpp"
#include "simgame/errors.hpp"
#include "simgame/exact_lp.hpp"
#include "simgame/game.hpp"
#include "simgame/generic_fast.hpp"
#include "simgame/matrix.hpp"
#include "simgame/ne_enum.hpp"
#include "simgame/param_sweep.hpp"
#include "simgame/rational.hpp"
#include "simgame/sim_build.hpp"
#include "simgame/voi.hpp"
#include "simgame/welfare.hpp"

#endif  // SIMGAME_SIMGAME_HPP_
