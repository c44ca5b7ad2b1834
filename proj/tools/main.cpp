#include "okbody/run.hpp"

#include <iostream>

int main(int argc, char** argv) {
    return okbody::run({argv + 1, argv + argc}, std::cout, std::cerr);
}
