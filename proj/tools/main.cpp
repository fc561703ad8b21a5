#include <iostream>
#include <string>
#include <vector>

#include "intermute/cli.hpp"

int main(int argc, char** argv) {
    return intermute::run(std::vector<std::string>(argv + 1, argv + argc), std::cout, std::cerr);
}
