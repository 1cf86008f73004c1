//! Reproducibility manifest attached to every CLI payload.
