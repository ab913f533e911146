#include "spinpulse/cli.hpp"

int main(int argc, char** argv) { return spinpulse::dispatch(argc, argv); }
