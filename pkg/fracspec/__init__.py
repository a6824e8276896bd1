"""Semi-analytical solver for multi-term variable-order time-fractional PDEs."""
