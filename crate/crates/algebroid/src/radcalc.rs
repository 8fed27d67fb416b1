//! Branch-order calculus for radical expressions.
