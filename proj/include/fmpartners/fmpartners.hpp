#pragma once

#include "fmpartners/error.hpp"
#include "fmpartners/fiber_calculus.hpp"
#include "fmpartners/surface_model.hpp"
#include "fmpartners/weil_chatelet.hpp"
#include "fmpartners/rigidity.hpp"
#include "fmpartners/fm_partners.hpp"
#include "fmpartners/catalog.hpp"
#include "fmpartners/json_io.hpp"
