#pragma once

#include "gradid/commpoly.hpp"
#include "gradid/error.hpp"
#include "gradid/field.hpp"
#include "gradid/freealg.hpp"
#include "gradid/generic.hpp"
#include "gradid/grading.hpp"
#include "gradid/groups.hpp"
#include "gradid/io.hpp"
#include "gradid/monomials.hpp"
#include "gradid/rewrite.hpp"
