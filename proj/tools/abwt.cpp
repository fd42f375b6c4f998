#include "abwt/cli.hpp"

int main(int argc, char** argv) { return abwt::cli::run(argc, argv); }
