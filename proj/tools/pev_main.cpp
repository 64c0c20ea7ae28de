/*
Copyright (c) 2026 The pev authors. All rights reserved.
Released under Apache 2.0 license as described in the file LICENSE.
*/
#include <iostream>

#include "pev/cli.hpp"

int main(int argc, char** argv) { return pev::cli::run(argc, argv, std::cout, std::cerr); }
