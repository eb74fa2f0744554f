/*
 Copyright 2026 The fwfl Authors

 Licensed under the Apache License, Version 2.0 (the "License");
 you may not use this file except in compliance with the License.
 You may obtain a copy of the License at

      https://www.apache.org/licenses/LICENSE-2.0

 Unless required by applicable law or agreed to in writing, software
 distributed under the License is distributed on an "AS IS" BASIS,
 WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 See the License for the specific language governing permissions and
 limitations under the License.
*/
#pragma once

#include "fwfl/batch_reactor.hpp"
#include "fwfl/data_io.hpp"
#include "fwfl/dd_sim.hpp"
#include "fwfl/errors.hpp"
#include "fwfl/freq_domain.hpp"
#include "fwfl/linalg.hpp"
#include "fwfl/lti.hpp"
#include "fwfl/model.hpp"
#include "fwfl/spectral_dataset.hpp"
#include "fwfl/time_domain.hpp"
#include "fwfl/tolerances.hpp"
