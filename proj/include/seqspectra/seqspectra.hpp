#pragma once

#include "seqspectra/error.hpp"
#include "seqspectra/gf.hpp"
#include "seqspectra/charsum.hpp"
#include "seqspectra/expsum.hpp"
#include "seqspectra/quadform.hpp"
#include "seqspectra/seqfam.hpp"
#include "seqspectra/code.hpp"
#include "seqspectra/oracle.hpp"
#include "seqspectra/verify.hpp"
