/*
* Copyright (C) 2026 carleman-reach contributors
*
* Licensed under the Apache License, Version 2.0 (the "License");
* you may not use this file except in compliance with the License.
* You may obtain a copy of the License at
*
*     http://www.apache.org/licenses/LICENSE-2.0
*
* Unless required by applicable law or agreed to in writing, software
* distributed under the License is distributed on an "AS IS" BASIS,
* WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
* See the License for the specific language governing permissions and
* limitations under the License.
*/
#ifndef CARLEMAN_CARLEMAN_HPP
#define CARLEMAN_CARLEMAN_HPP

#include "carleman/carleman_lift.hpp"
#include "carleman/error_bound.hpp"
#include "carleman/errors.hpp"
#include "carleman/interval.hpp"
#include "carleman/linear_reach.hpp"
#include "carleman/models.hpp"
#include "carleman/reach_driver.hpp"
#include "carleman/set_types.hpp"
#include "carleman/tensor_algebra.hpp"
#include "carleman/validation.hpp"

#endif // CARLEMAN_CARLEMAN_HPP
