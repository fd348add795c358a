use std::fmt;
use std::fs;
use std::io::Write;
use std::path::Path;

use bchroma::edgelist::parse_edgelist;
use bchroma::Graph;

/// Bad arguments or unreadable input.
pub const EXIT_INPUT: i32 = 2;
/// `check`: the coloring is not a b-coloring.
pub const EXIT_NOT_B_COLORING: i32 = 3;

/// An error carrying the process exit code it should produce.
#[derive(Debug)]
pub struct Failure {
    pub code: i32,
    pub message: String,
}

impl Failure {
    pub fn input(message: impl fmt::Display) -> Self {
        Failure {
            code: EXIT_INPUT,
            message: message.to_string(),
        }
    }

    pub fn with_code(code: i32, message: impl fmt::Display) -> Self {
        Failure {
            code,
            message: message.to_string(),
        }
    }
}

pub type CliResult<T = ()> = Result<T, Failure>;

pub fn read_text(path: &Path) -> CliResult<String> {
    fs::read_to_string(path).map_err(|e| Failure::input(format!("{}: {e}", path.display())))
}

pub fn read_graph(path: &Path) -> CliResult<Graph> {
    parse_edgelist(&read_text(path)?)
        .map_err(|e| Failure::input(format!("{}: {e}", path.display())))
}

/// Writes through a temporary file in the target directory and renames it
/// into place, so readers never see a partial file.
pub fn write_atomic(path: &Path, contents: &str) -> CliResult {
    let fail = |e: &dyn fmt::Display| Failure::input(format!("{}: {e}", path.display()));
    let dir = match path.parent() {
        Some(p) if !p.as_os_str().is_empty() => p,
        _ => Path::new("."),
    };
    let mut tmp = tempfile::NamedTempFile::new_in(dir).map_err(|e| fail(&e))?;
    tmp.write_all(contents.as_bytes()).map_err(|e| fail(&e))?;
    tmp.persist(path).map_err(|e| fail(&e.error))?;
    Ok(())
}

/// Checks that an output path can be created before any work starts.
pub fn check_output(path: &Path) -> CliResult {
    let dir = match path.parent() {
        Some(p) if !p.as_os_str().is_empty() => p,
        _ => Path::new("."),
    };
    if !dir.is_dir() {
        return Err(Failure::input(format!(
            "{}: directory does not exist",
            dir.display()
        )));
    }
    if path.is_dir() {
        return Err(Failure::input(format!(
            "{}: is a directory",
            path.display()
        )));
    }
    Ok(())
}
