//! Library half of the command-line front end: the group-expression
//! grammar and the on-disk result cache. The binary in `main.rs` wires
//! these to the engine's subcommands.

pub mod cache;
pub mod expr;
