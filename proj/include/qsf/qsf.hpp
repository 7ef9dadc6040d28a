// Umbrella header.

#ifndef QSF_QSF_HPP
#define QSF_QSF_HPP

#include "qsf/airy.hpp"
#include "qsf/base.hpp"
#include "qsf/bessel.hpp"
#include "qsf/borel.hpp"
#include "qsf/connection.hpp"
#include "qsf/hypergeometric.hpp"
#include "qsf/laplace.hpp"
#include "qsf/pochhammer.hpp"
#include "qsf/series.hpp"
#include "qsf/theta.hpp"
#include "qsf/verify.hpp"

#endif
