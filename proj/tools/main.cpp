#include <iostream>

#include "qcantor/cli.hpp"

int main(int argc, char** argv) {
    return qcantor::run_cli({argv + 1, argv + argc}, std::cout, std::cerr);
}
