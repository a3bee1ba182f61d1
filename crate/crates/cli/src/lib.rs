//! Command-line front-end for the `triop` library.

pub mod app;
pub mod parse;
pub mod svg;

pub use app::{main_with_args, run, Cli, Command};
pub use parse::{parse_complex, ParseError};
pub use svg::{render_svg, SvgScene};
