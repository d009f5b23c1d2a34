#pragma once

#include "cyclotomic.hpp"
#include "dgh.hpp"
#include "error.hpp"
#include "fusion.hpp"
#include "group.hpp"
#include "group_chars.hpp"
#include "json_io.hpp"
#include "matrix.hpp"
#include "rep.hpp"
#include "rt.hpp"
#include "stabilizers.hpp"
#include "xmod.hpp"
