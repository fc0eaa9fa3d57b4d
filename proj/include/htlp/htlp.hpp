#pragma once

#include "htlp/errors.hpp"
#include "htlp/formula.hpp"
#include "htlp/classify.hpp"
#include "htlp/theory.hpp"
#include "htlp/parser.hpp"
#include "htlp/printer.hpp"
#include "htlp/interpretation.hpp"
#include "htlp/semantics.hpp"
#include "htlp/countermodel_transform.hpp"
#include "htlp/syntactic_transform.hpp"
#include "htlp/dnf.hpp"
#include "htlp/counting.hpp"
