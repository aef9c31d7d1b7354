#include "weylheat/cli.hpp"

int main(int argc, char** argv) { return weylheat::cli::run(argc, argv); }
