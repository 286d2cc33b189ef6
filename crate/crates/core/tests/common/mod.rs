//! Checks shared between the focused test binaries and the acceptance run.
#![allow(dead_code)]

pub mod oracle;
pub mod properties;
