#pragma once

#include "wordlab/classifiers.hpp"
#include "wordlab/complexity.hpp"
#include "wordlab/generators.hpp"
#include "wordlab/palindrome_index.hpp"
#include "wordlab/theorem_lab.hpp"
#include "wordlab/word.hpp"
#include "wordlab/word_core.hpp"
