#include <iostream>

#include "athos/cli.hpp"

int main(int argc, char** argv) {
    return athos::cli::run(argc, argv, std::cout, std::cerr);
}
