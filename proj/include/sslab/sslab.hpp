#pragma once

#include "sslab/abelian.hpp"
#include "sslab/errors.hpp"
#include "sslab/finite_group.hpp"
#include "sslab/fox.hpp"
#include "sslab/json_util.hpp"
#include "sslab/laurent.hpp"
#include "sslab/lspace.hpp"
#include "sslab/numeric.hpp"
#include "sslab/presentation.hpp"
#include "sslab/scans.hpp"
#include "sslab/seifert.hpp"
#include "sslab/slope.hpp"
#include "sslab/snf.hpp"
#include "sslab/tangles.hpp"
#include "sslab/word.hpp"
