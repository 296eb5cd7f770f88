#ifndef ZETACF_ZETACF_HPP
#define ZETACF_ZETACF_HPP

#include <zetacf/bigfloat.hpp>
#include <zetacf/coeff.hpp>
#include <zetacf/continued_fraction.hpp>
#include <zetacf/errors.hpp>
#include <zetacf/experiments.hpp>
#include <zetacf/parallel.hpp>
#include <zetacf/partial_fraction.hpp>
#include <zetacf/polynomial.hpp>
#include <zetacf/power_series.hpp>
#include <zetacf/rational.hpp>
#include <zetacf/scalar.hpp>
#include <zetacf/sinh_series.hpp>
#include <zetacf/worpitzky.hpp>
#include <zetacf/zero_scan.hpp>
#include <zetacf/zeta_reference.hpp>

namespace zetacf {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace zetacf

#endif  // ZETACF_ZETACF_HPP
