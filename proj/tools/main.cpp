#include "nearhex/cli.hpp"

int main(int argc, char** argv) { return nearhex::cli::run(argc, argv); }
