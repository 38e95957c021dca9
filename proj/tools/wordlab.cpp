#include <iostream>

#include "wordlab/cli.hpp"

int main(int argc, char** argv) {
    return wordlab::cli::run(argc, argv, std::cout, std::cerr);
}
