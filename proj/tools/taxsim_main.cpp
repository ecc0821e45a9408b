#include "taxsim/scenario_io.hpp"

int main(int argc, char** argv) {
    return taxsim::cli_main(argc, argv);
}
