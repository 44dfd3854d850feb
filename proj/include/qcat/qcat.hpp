#pragma once

#include "qcat/catalan.hpp"
#include "qcat/errors.hpp"
#include "qcat/explorer.hpp"
#include "qcat/integer.hpp"
#include "qcat/poly.hpp"
#include "qcat/qkit.hpp"
#include "qcat/report.hpp"
#include "qcat/verifier.hpp"
#include "qcat/version.hpp"
