#ifndef ZONECX_ZONECX_HPP
#define ZONECX_ZONECX_HPP

#include "zonecx/errors.hpp"
#include "zonecx/exact_scalar.hpp"
#include "zonecx/projective.hpp"
#include "zonecx/arrangement.hpp"
#include "zonecx/zones.hpp"
#include "zonecx/discharging.hpp"
#include "zonecx/analysis.hpp"
#include "zonecx/generators.hpp"
#include "zonecx/document.hpp"
#include "zonecx/search.hpp"
#include "zonecx/svg.hpp"
#include "zonecx/report_json.hpp"

#endif  // ZONECX_ZONECX_HPP
