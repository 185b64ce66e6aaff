#include <iostream>

#include "photon_ledger/cli.hpp"

int main(int argc, char** argv) {
    return photon_ledger::cli::run(argc, argv, std::cout, std::cerr);
}
