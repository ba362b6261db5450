//! Instance I/O, generators and property suites behind the `chroma` binary.

pub mod dimacs;
pub mod gen;
pub mod suites;

pub use dimacs::{
    emit_dimacs, emit_instance, parse_dimacs, parse_instance, DimacsError, InstanceFile,
};
pub use gen::{gen_spec_free, Generated};
