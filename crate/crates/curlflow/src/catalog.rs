//! Built-in catalog of reference systems, shipped as ordinary
//! system-definition files so `examples show` prints exactly what the
//! parser consumes.

use crate::parser::{parse_system, SystemDef};
use crate::report::Classification;

/// One catalog entry with its expected behavior under `verify` and
/// `analyze`, used by `examples run-all` to cross-check the whole
/// collection.
#[derive(Debug, Clone, Copy)]
pub struct CatalogEntry {
    pub name: &'static str,
    pub source: &'static str,
    /// Whether every declared feature passes verification. False for the
    /// as-printed erratum entries, which exist to keep failures
    /// observable.
    pub verify_passes: bool,
    pub classification: Classification,
}

pub const ENTRIES: &[CatalogEntry] = &[
    CatalogEntry {
        name: "circle-map-3d",
        source: include_str!("../systems/circle-map-3d.sys"),
        verify_passes: true,
        classification: Classification::NambuHamiltonian,
    },
    CatalogEntry {
        name: "euler-top",
        source: include_str!("../systems/euler-top.sys"),
        verify_passes: true,
        classification: Classification::NambuHamiltonian,
    },
    CatalogEntry {
        name: "lagrange",
        source: include_str!("../systems/lagrange.sys"),
        verify_passes: true,
        classification: Classification::NambuHamiltonian,
    },
    CatalogEntry {
        name: "lotka-volterra",
        source: include_str!("../systems/lotka-volterra.sys"),
        verify_passes: true,
        classification: Classification::NambuHamiltonian,
    },
    CatalogEntry {
        name: "paper-3.1",
        source: include_str!("../systems/paper-3.1.sys"),
        verify_passes: true,
        classification: Classification::NambuHamiltonian,
    },
    CatalogEntry {
        name: "paper-4",
        source: include_str!("../systems/paper-4.sys"),
        verify_passes: true,
        classification: Classification::VectorHamiltonianOnly,
    },
    CatalogEntry {
        name: "paper-4-potential-as-printed",
        source: include_str!("../systems/paper-4-potential-as-printed.sys"),
        verify_passes: true,
        classification: Classification::VectorHamiltonianOnly,
    },
    CatalogEntry {
        name: "paper-4.2-deformed",
        source: include_str!("../systems/paper-4.2-deformed.sys"),
        verify_passes: true,
        classification: Classification::NambuHamiltonian,
    },
    CatalogEntry {
        name: "paper-4.2-potential-as-printed",
        source: include_str!("../systems/paper-4.2-potential-as-printed.sys"),
        verify_passes: false,
        classification: Classification::NambuHamiltonian,
    },
    CatalogEntry {
        name: "sir",
        source: include_str!("../systems/sir.sys"),
        verify_passes: true,
        classification: Classification::NambuHamiltonian,
    },
];

/// All catalog systems, parsed, in name order.
pub fn catalog() -> Vec<SystemDef> {
    ENTRIES
        .iter()
        .map(|e| parse_system(e.source).expect("catalog files parse"))
        .collect()
}

pub fn entry(name: &str) -> Option<&'static CatalogEntry> {
    ENTRIES.iter().find(|e| e.name == name)
}

/// Parses one catalog system by name.
pub fn system(name: &str) -> Option<SystemDef> {
    entry(name).map(|e| parse_system(e.source).expect("catalog files parse"))
}
