//! Report formats and diagram rendering behind the `ferrers` binary.

pub mod render;
pub mod report;
