#pragma once

// Everything: exact arithmetic, sl(n), tensors, the CYBE and bialgebra
// checks, the windowed doubles, quasi-Frobenius data, gauges, text formats.

#include "qrcybe/error.hpp"
#include "qrcybe/rational.hpp"
#include "qrcybe/poly.hpp"
#include "qrcybe/ratfun.hpp"
#include "qrcybe/expr.hpp"
#include "qrcybe/linalg.hpp"
#include "qrcybe/lie.hpp"
#include "qrcybe/tensor.hpp"
#include "qrcybe/cybe.hpp"
#include "qrcybe/catalog.hpp"
#include "qrcybe/doubles.hpp"
#include "qrcybe/frobenius.hpp"
#include "qrcybe/gauge.hpp"
#include "qrcybe/document.hpp"
