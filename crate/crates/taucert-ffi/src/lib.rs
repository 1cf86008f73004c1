//! C ABI for the taucert library.
//!
//! Placeholder while the core crate is under construction.
