//! Library side of the lcdkit command line tool: fixture-backed expected
//! tables and the verification harness shared by the `lcdkit` binary and
//! the integration tests.

pub mod expected;
