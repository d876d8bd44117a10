#include <catch2/catch_amalgamated.hpp>

#include "property_checks.hpp"

using namespace reslab;

TEST_CASE("property: 4-cycle label invariants in resonance graphs") {
    props::check_four_cycle_labels(1000, 20240801);
}

TEST_CASE("property: accepted theta labellings are isometric") {
    props::check_theta_isometry(1000, 20240802);
}

TEST_CASE("property: daisy certificates are downward closed antichains") {
    props::check_daisy_certificates(1000, 20240803);
}

TEST_CASE("property: induced hypercube label sets are resonant") {
    props::check_face_label_map(1000, 20240804);
}
