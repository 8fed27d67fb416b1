//! Branch points, monodromy, Puiseux expansions.
