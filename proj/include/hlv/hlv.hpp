#pragma once

// everything except the GMP-backed oracle, which needs -lgmpxx -lgmp
#include "hlv/modnum.hpp"
#include "hlv/primes.hpp"
#include "hlv/sequences.hpp"
#include "hlv/quadring.hpp"
#include "hlv/checks.hpp"
#include "hlv/scan.hpp"
#include "hlv/report.hpp"
