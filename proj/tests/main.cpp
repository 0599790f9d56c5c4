#define DOCTEST_CONFIG_IMPLEMENT
#include "doctest.h"

#include "primring/groebner.hpp"

int main(int argc, char** argv) {
    primring::set_verify(true);
    doctest::Context ctx(argc, argv);
    return ctx.run();
}
