//! Command-line front end: curve CSV, OBJ meshes, tables and verification.

pub mod args;
pub mod commands;
pub mod emit;
pub mod error;
pub mod reference;
pub mod table;
pub mod verify;

use std::io::Write;

pub use args::{Cli, Command};
pub use error::{CliError, Result};

pub fn run(cli: &Cli, out: &mut dyn Write) -> Result<()> {
    match &cli.command {
        Command::Curve(a) => commands::curve(a, out),
        Command::Qform(a) => commands::qform(a, out),
        Command::CriticalLength(a) => commands::critical_length(a, out),
        Command::Table(a) => commands::table(a, out),
        Command::Cylinder(a) => commands::cylinder(a, out),
        Command::Mesh(a) => commands::mesh(a),
        Command::Verify(a) => verify::run(a, out),
    }
}
