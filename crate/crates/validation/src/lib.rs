//! Holds the `acceptance` test target. Kept in its own package so that it
//! runs after the unit and integration suites of the other crates.
