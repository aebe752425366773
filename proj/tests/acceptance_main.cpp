// Runs the full acceptance suite, one pass/fail line per criterion.
// Exit status 0 iff every criterion passed.

#include <iostream>

#include "sav/acceptance.hpp"

int main() {
    return sav::print_acceptance(std::cout) ? 0 : 1;
}
