#include "pamcpp/cli.hpp"

int main(int argc, char** argv) { return pamcpp::run_cli(argc, argv); }
