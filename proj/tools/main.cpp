#include "simule/cli.hpp"

int main(int argc, char** argv) { return simule::cli::run(argc, argv); }
