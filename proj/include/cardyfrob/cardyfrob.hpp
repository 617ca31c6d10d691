#pragma once

#include "errors.hpp"
#include "rational.hpp"
#include "matrix.hpp"
#include "group.hpp"
#include "action.hpp"
#include "report.hpp"
#include "frobenius.hpp"
#include "cardy.hpp"
#include "hurwitz.hpp"
#include "oracle.hpp"
