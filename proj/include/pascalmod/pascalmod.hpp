#pragma once

#include "automata.hpp"
#include "basep.hpp"
#include "checks.hpp"
#include "integer.hpp"
#include "nim.hpp"
#include "oeis.hpp"
#include "pascal.hpp"
#include "poly.hpp"
#include "pyramid.hpp"
#include "render.hpp"
#include "report.hpp"
#include "sequences.hpp"
#include "summatory.hpp"
