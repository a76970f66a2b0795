#pragma once

#include "steiner/closed_forms.hpp"
#include "steiner/combinations.hpp"
#include "steiner/corpus.hpp"
#include "steiner/error.hpp"
#include "steiner/graph.hpp"
#include "steiner/graph6.hpp"
#include "steiner/oracle.hpp"
#include "steiner/params.hpp"
#include "steiner/rational.hpp"
#include "steiner/tree.hpp"
#include "steiner/verdict.hpp"
#include "steiner/verifier.hpp"
#include "steiner/version.hpp"
