//! Theorem checkers and arithmetic criteria.
