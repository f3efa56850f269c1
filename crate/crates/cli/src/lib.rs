//! Library side of the command line tool. The binary only parses arguments;
//! the report assembly lives here so tests can drive it directly.

pub mod report;
