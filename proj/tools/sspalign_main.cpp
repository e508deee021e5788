#include "sspalign/cli.hpp"

int main(int argc, char** argv) { return sspalign::run_cli(argc, argv); }
