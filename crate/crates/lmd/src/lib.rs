//! File formats, a threaded runner, JSON records and the command-line front
//! end for [`lmd_core`].

pub mod cli;
pub mod formats;
pub mod parallel;
pub mod record;
