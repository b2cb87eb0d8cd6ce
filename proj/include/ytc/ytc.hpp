#ifndef YTC_YTC_HPP
#define YTC_YTC_HPP

#include "ytc/common.hpp"
#include "ytc/complex.hpp"
#include "ytc/decomp.hpp"
#include "ytc/formulas.hpp"
#include "ytc/homology.hpp"
#include "ytc/homotopy.hpp"
#include "ytc/partition.hpp"
#include "ytc/pathideal.hpp"
#include "ytc/verify.hpp"
#include "ytc/young.hpp"

#endif
