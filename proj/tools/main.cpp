#include <iostream>

#include "qumea/cli.hpp"

int main(int argc, char** argv) {
    return qumea::cli_main(argc, argv, std::cout, std::cerr);
}
