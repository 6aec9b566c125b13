#include <iostream>

#include "lgp/cli.hpp"

int main(int argc, char** argv) {
    return lgp::cli::dispatch(argc, argv, std::cout, std::cerr);
}
