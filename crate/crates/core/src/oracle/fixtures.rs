//! Plain-text cache of oracle values: one `x y re_ref im_ref source` record
//! per line, numbers with 17 significant digits, `#` starts a comment.

use std::fmt;
use std::fs;
use std::io::Write;
use std::path::Path;
use std::str::FromStr;

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FixtureSource {
    Series,
    Quadrature,
}

impl fmt::Display for FixtureSource {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            FixtureSource::Series => "series",
            FixtureSource::Quadrature => "quadrature",
        })
    }
}

impl FromStr for FixtureSource {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "series" => Ok(FixtureSource::Series),
            "quadrature" => Ok(FixtureSource::Quadrature),
            other => Err(Error::Fixture(format!("unknown source `{other}`"))),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FixtureRecord {
    pub x: f64,
    pub y: f64,
    pub re: f64,
    pub im: f64,
    pub source: FixtureSource,
}

impl fmt::Display for FixtureRecord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{:.16e} {:.16e} {:.16e} {:.16e} {}",
            self.x, self.y, self.re, self.im, self.source
        )
    }
}

impl FromStr for FixtureRecord {
    type Err = Error;

    fn from_str(line: &str) -> Result<Self> {
        let fields: Vec<&str> = line.split_whitespace().collect();
        if fields.len() != 5 {
            return Err(Error::Fixture(format!(
                "expected 5 fields, found {} in `{line}`",
                fields.len()
            )));
        }
        let num = |s: &str| {
            s.parse::<f64>()
                .map_err(|e| Error::Fixture(format!("bad number `{s}`: {e}")))
        };
        Ok(FixtureRecord {
            x: num(fields[0])?,
            y: num(fields[1])?,
            re: num(fields[2])?,
            im: num(fields[3])?,
            source: fields[4].parse()?,
        })
    }
}

pub fn parse_fixtures(text: &str) -> Result<Vec<FixtureRecord>> {
    text.lines()
        .map(str::trim)
        .filter(|l| !l.is_empty() && !l.starts_with('#'))
        .map(str::parse)
        .collect()
}

pub fn read_fixtures(path: &Path) -> Result<Vec<FixtureRecord>> {
    let text =
        fs::read_to_string(path).map_err(|e| Error::Fixture(format!("{}: {e}", path.display())))?;
    parse_fixtures(&text)
}

/// Writes the records next to `path` and renames into place, so readers
/// never observe a half-written file.
pub fn write_fixtures(path: &Path, header: &str, records: &[FixtureRecord]) -> Result<()> {
    let io = |e: std::io::Error| Error::Fixture(format!("{}: {e}", path.display()));
    let dir = path
        .parent()
        .filter(|p| !p.as_os_str().is_empty())
        .unwrap_or(Path::new("."));
    let mut tmp = tempfile::NamedTempFile::new_in(dir).map_err(io)?;
    for line in header.lines() {
        writeln!(tmp, "# {line}").map_err(io)?;
    }
    writeln!(tmp, "# x y re_ref im_ref source").map_err(io)?;
    for r in records {
        writeln!(tmp, "{r}").map_err(io)?;
    }
    tmp.persist(path).map_err(|e| io(e.error))?;
    Ok(())
}
