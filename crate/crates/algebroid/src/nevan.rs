//! Nevanlinna functionals on model domains.
