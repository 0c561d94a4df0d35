#ifndef ARGAGG_ARGAGG_HPP
#define ARGAGG_ARGAGG_HPP

#include "argagg/corpus.hpp"
#include "argagg/domain.hpp"
#include "argagg/error.hpp"
#include "argagg/framework.hpp"
#include "argagg/labelling.hpp"
#include "argagg/operators.hpp"
#include "argagg/permutation.hpp"
#include "argagg/plurality.hpp"
#include "argagg/postulates.hpp"
#include "argagg/profile.hpp"
#include "argagg/report.hpp"
#include "argagg/search.hpp"
#include "argagg/semantics.hpp"
#include "argagg/structure.hpp"
#include "argagg/table1.hpp"
#include "argagg/witness.hpp"

#endif
