#include "gorenstein/cli.hpp"

#include <iostream>

int main(int argc, char** argv) {
    try {
        return gorenstein::cli::run(argc, argv, std::cout, std::cerr);
    } catch (const std::exception& e) {
        std::cerr << "fatal: " << e.what() << '\n';
        return gorenstein::cli::kExitInvariant;
    }
}
