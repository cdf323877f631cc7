// Runs every acceptance criterion and prints one pass/fail line each.
#include <iostream>

#include "cabletau/acceptance.hpp"

int main() { return cabletau::run_acceptance(std::cout) ? 0 : 1; }
