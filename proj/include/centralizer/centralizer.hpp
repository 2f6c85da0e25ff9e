#pragma once

#include "centralizer/arith.hpp"
#include "centralizer/bijection.hpp"
#include "centralizer/branch.hpp"
#include "centralizer/bratteli.hpp"
#include "centralizer/dims.hpp"
#include "centralizer/error.hpp"
#include "centralizer/oracle.hpp"
#include "centralizer/verify.hpp"
#include "centralizer/young.hpp"
