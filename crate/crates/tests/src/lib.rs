//! Holds the end-to-end acceptance test; it has no library code.
