#include <string>
#include <vector>

#include "starprism/cli.hpp"

int main(int argc, char** argv) {
    return starprism::cli::run(std::vector<std::string>(argv + 1, argv + argc));
}
