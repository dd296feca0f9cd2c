use quasitoric_core::arith::ArithError;
use quasitoric_core::config::ConfigError;
use quasitoric_core::geometry::GeometryError;
use quasitoric_core::lattice::LatticeError;
use quasitoric_core::linalg::LinalgError;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    ParseError(String),
    #[error("{0}")]
    FieldMismatch(String),
    #[error("{0}")]
    Io(String),
    #[error("{0}")]
    MissingInput(String),
    #[error("only planar bodies can be drawn, got dimension {0}")]
    NotPlanar(usize),
    #[error(transparent)]
    Arith(#[from] ArithError),
    #[error(transparent)]
    Linalg(#[from] LinalgError),
    #[error(transparent)]
    Geometry(#[from] GeometryError),
    #[error(transparent)]
    Lattice(#[from] LatticeError),
    #[error(transparent)]
    Config(#[from] ConfigError),
}

const WRAPPERS: [&str; 5] = ["Arith", "Linalg", "Geometry", "Lattice", "Config"];

impl CliError {
    /// The innermost error variant name, e.g. `NotBalanced` for a
    /// configuration error or `DimensionTooHigh` for a geometry error
    /// reached through a lattice computation.
    pub fn class(&self) -> String {
        let debug = format!("{self:?}");
        let mut rest = debug.as_str();
        loop {
            let end = rest.find(|c: char| !c.is_alphanumeric() && c != '_').unwrap_or(rest.len());
            let name = &rest[..end];
            if WRAPPERS.contains(&name) && rest[end..].starts_with('(') {
                rest = &rest[end + 1..];
            } else {
                return name.to_string();
            }
        }
    }

    /// `error[Class]: message`, the single diagnostic line printed on failure.
    pub fn diagnostic(&self) -> String {
        format!("error[{}]: {}", self.class(), self)
    }
}

impl From<std::io::Error> for CliError {
    fn from(e: std::io::Error) -> Self {
        CliError::Io(e.to_string())
    }
}

impl From<serde_json::Error> for CliError {
    fn from(e: serde_json::Error) -> Self {
        CliError::ParseError(e.to_string())
    }
}
