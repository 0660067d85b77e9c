//! Text instance files, run reports and SVG output.

pub mod format;
pub mod report;
pub mod svg;

pub use format::{emit_instance, parse_instance, FormatError};
pub use report::{instance_summary, RunReport};
pub use svg::{render_exchange_svg, render_svg};
