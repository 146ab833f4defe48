#pragma once

#include "ccseq/constructions.hpp"
#include "ccseq/correlation.hpp"
#include "ccseq/cyclotomic.hpp"
#include "ccseq/errors.hpp"
#include "ccseq/mixed_radix.hpp"
#include "ccseq/parallel.hpp"
#include "ccseq/phase.hpp"
#include "ccseq/poly.hpp"
#include "ccseq/radix_profile.hpp"
#include "ccseq/verification.hpp"
