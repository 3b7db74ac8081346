//! Command-line front end and read-only JSON service over the game atlas.

pub mod cli;
pub mod record;
pub mod service;
