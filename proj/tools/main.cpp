#include <string>
#include <vector>

#include "pdmosc/cli.hpp"

int main(int argc, char** argv) {
    return pdmosc::cli::run(std::vector<std::string>(argv + 1, argv + argc));
}
