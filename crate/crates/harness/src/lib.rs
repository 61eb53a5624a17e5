//! Catalog ingestion, corpus verification, class 𝒞 search and report
//! rendering behind the `cdlat` binary.

pub mod catalog;
mod error;
pub mod family;
pub mod report;
pub mod search;
pub mod verify;

pub use catalog::{load_catalog, parse_catalog, CatalogEntry, EntryKind};
pub use error::{HarnessError, Result};
pub use search::{search_class_c, SearchReport};
pub use verify::{verify, VerificationReport, VerifyOptions};
