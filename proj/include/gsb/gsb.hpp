#pragma once

#include "gsb/errors.hpp"
#include "gsb/freealg.hpp"
#include "gsb/presentations.hpp"
#include "gsb/rewrite.hpp"
#include "gsb/scalar.hpp"
#include "gsb/standard.hpp"
#include "gsb/structure.hpp"
