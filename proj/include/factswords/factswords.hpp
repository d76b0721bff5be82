#pragma once

// Umbrella header.

#include "factswords/corpus.hpp"
#include "factswords/diagnostics.hpp"
#include "factswords/experiments.hpp"
#include "factswords/facts.hpp"
#include "factswords/hilberg.hpp"
#include "factswords/io.hpp"
#include "factswords/lz78.hpp"
#include "factswords/markov.hpp"
#include "factswords/ngram.hpp"
#include "factswords/oracle.hpp"
#include "factswords/order.hpp"
#include "factswords/random.hpp"
#include "factswords/report.hpp"
#include "factswords/santa_fe.hpp"
#include "factswords/sequence.hpp"
#include "factswords/subword.hpp"
#include "factswords/version.hpp"
#include "factswords/zipf.hpp"
