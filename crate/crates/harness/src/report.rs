//! Deterministic rendering of results as JSON, DOT or plain text.

use std::fmt::Write as _;
use std::fs;
use std::path::Path;

use cdlat_core::{CdResult, ClassificationReport, Group, SubgroupLattice};
use serde::Serialize;

use crate::error::{HarnessError, Result};
use crate::search::SearchReport;
use crate::verify::VerificationReport;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Json,
    Dot,
    Text,
}

pub fn to_json<T: Serialize + ?Sized>(value: &T) -> Result<String> {
    let mut s = serde_json::to_string_pretty(value)?;
    s.push('\n');
    Ok(s)
}

fn no_dot(what: &str) -> HarnessError {
    HarnessError::Usage(format!("DOT output is only available for lattice data, not {what}"))
}

#[derive(Serialize)]
struct SubgroupRow {
    index: usize,
    order: usize,
    generators: Vec<usize>,
    elements: Vec<usize>,
}

#[derive(Serialize)]
struct CdJson<'a> {
    group: &'a str,
    order: usize,
    subgroups: Vec<SubgroupRow>,
    #[serde(flatten)]
    cd: &'a CdResult,
}

fn subgroup_rows(lat: &SubgroupLattice) -> Vec<SubgroupRow> {
    (0..lat.len())
        .map(|i| SubgroupRow {
            index: i,
            order: lat.get(i).size(),
            generators: lat.generators(i).to_vec(),
            elements: lat.get(i).elements(),
        })
        .collect()
}

pub fn render_subgroups(g: &Group, lat: &SubgroupLattice, format: Format) -> Result<String> {
    match format {
        Format::Dot => Ok(lat.to_dot(g.label(), None, &[])),
        Format::Json => to_json(&subgroup_rows(lat)),
        Format::Text => {
            let mut s = String::new();
            let _ = writeln!(s, "{}: order {}, {} subgroups", g.label(), g.order(), lat.len());
            for row in subgroup_rows(lat) {
                let _ = writeln!(s, "{:>5}  |H|={:<5} gens={:?}", row.index, row.order, row.generators);
            }
            Ok(s)
        }
    }
}

pub fn render_cd(g: &Group, lat: &SubgroupLattice, cd: &CdResult, format: Format) -> Result<String> {
    match format {
        Format::Dot => Ok(lat.to_dot(g.label(), Some(&cd.measures), &cd.cd_members)),
        Format::Json => to_json(&CdJson {
            group: g.label(),
            order: g.order(),
            subgroups: subgroup_rows(lat),
            cd,
        }),
        Format::Text => {
            let mut s = String::new();
            let _ = writeln!(s, "group: {} (order {})", g.label(), g.order());
            let _ = writeln!(s, "subgroups: {}", lat.len());
            let _ = writeln!(s, "measure image: {:?}", cd.image);
            let _ = writeln!(s, "m*: {}", cd.m_star);
            let sizes: Vec<usize> = cd.cd_members.iter().map(|&i| lat.get(i).size()).collect();
            let _ = writeln!(s, "CD members: {:?} (orders {sizes:?})", cd.cd_members);
            let _ = writeln!(s, "M(G): subgroup {} of order {}", cd.cd_min, lat.get(cd.cd_min).size());
            Ok(s)
        }
    }
}

pub fn render_classification(r: &ClassificationReport, format: Format) -> Result<String> {
    match format {
        Format::Json => to_json(r),
        Format::Text => Ok(r.to_text()),
        Format::Dot => Err(no_dot("a classification report")),
    }
}

pub fn render_verification(reports: &[VerificationReport], format: Format) -> Result<String> {
    match format {
        Format::Json if reports.len() == 1 => to_json(&reports[0]),
        Format::Json => to_json(reports),
        Format::Text => {
            let mut s = String::new();
            for r in reports {
                let _ = writeln!(s, "{}", r.summary_line());
                for v in &r.violations {
                    let _ = writeln!(s, "    {}: {}", v.group, v.detail);
                }
            }
            Ok(s)
        }
        Format::Dot => Err(no_dot("a verification report")),
    }
}

pub fn render_search(r: &SearchReport, format: Format) -> Result<String> {
    match format {
        Format::Json => to_json(r),
        Format::Text => Ok(r.to_text()),
        Format::Dot => Err(no_dot("a search report")),
    }
}

/// Writes to `path`, or to stdout when there is none.
pub fn emit(text: &str, path: Option<&Path>) -> Result<()> {
    match path {
        Some(p) => fs::write(p, text).map_err(|e| HarnessError::io(p, e)),
        None => {
            use std::io::Write;
            let mut out = std::io::stdout().lock();
            out.write_all(text.as_bytes()).map_err(|e| HarnessError::io("<stdout>", e))
        }
    }
}
