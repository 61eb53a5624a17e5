//! JSON Lines group catalogs. One entry per line:
//! `{"name": .., "kind": "perm" | "table" | "presentation" | "builtin", "data": .., "order": ..}`.
//! Permutations are 0-based image arrays, tables are row-major arrays
//! (flat, or one array per row), presentations use the DSL, and builtin
//! entries name a family as `construct` does.

use std::collections::HashMap;
use std::fs;
use std::path::Path;

use cdlat_core::presentation::DEFAULT_MAX_COSETS;
use cdlat_core::{enumerate, parse_presentation, Group, DEFAULT_ORDER_CAP};
use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::error::{HarnessError, Result};
use crate::family::{build_family, split_tokens};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum EntryKind {
    Perm,
    Table,
    Presentation,
    Builtin,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CatalogEntry {
    pub name: String,
    pub kind: EntryKind,
    pub data: Value,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub order: Option<usize>,
}

impl CatalogEntry {
    /// Table entry carrying the group's multiplication table verbatim.
    pub fn from_group(g: &Group, name: &str) -> CatalogEntry {
        CatalogEntry {
            name: name.to_string(),
            kind: EntryKind::Table,
            data: Value::from(g.table().to_vec()),
            order: Some(g.order()),
        }
    }

    pub fn to_json_line(&self) -> String {
        serde_json::to_string(self).expect("catalog entries always serialize")
    }

    pub fn build(&self) -> std::result::Result<Group, String> {
        let g = match self.kind {
            EntryKind::Table => table_group(&self.data, self.order)?,
            EntryKind::Perm => {
                let gens: Vec<Vec<usize>> = serde_json::from_value(self.data.clone())
                    .map_err(|e| format!("permutation data: {e}"))?;
                perm_group(&gens, DEFAULT_ORDER_CAP)?
            }
            EntryKind::Presentation => {
                let text = self.data.as_str().ok_or("presentation data must be a string")?;
                let p = parse_presentation(text).map_err(|e| e.to_string())?;
                enumerate(&p, DEFAULT_MAX_COSETS).map_err(|e| e.to_string())?
            }
            EntryKind::Builtin => {
                let text = self.data.as_str().ok_or("builtin data must be a string")?;
                build_family(&split_tokens(text)).map_err(|e| e.to_string())?
            }
        };
        if let Some(o) = self.order {
            if o != g.order() {
                return Err(format!("declared order {o} but constructed order {}", g.order()));
            }
        }
        Ok(g.with_label(self.name.clone()))
    }
}

fn table_group(data: &Value, declared: Option<usize>) -> std::result::Result<Group, String> {
    let rows = data.as_array().ok_or("table data must be an array")?;
    let mut flat: Vec<u32> = Vec::new();
    for row in rows {
        match row {
            Value::Array(r) => {
                for x in r {
                    flat.push(entry_u32(x)?);
                }
            }
            x => flat.push(entry_u32(x)?),
        }
    }
    let n = declared.unwrap_or_else(|| (flat.len() as f64).sqrt().round() as usize);
    if n > DEFAULT_ORDER_CAP {
        return Err(cdlat_core::Error::OrderCap { order: n, cap: DEFAULT_ORDER_CAP }.to_string());
    }
    Group::from_table(n, flat, "").map_err(|e| e.to_string())
}

fn entry_u32(x: &Value) -> std::result::Result<u32, String> {
    x.as_u64()
        .and_then(|v| u32::try_from(v).ok())
        .ok_or_else(|| format!("table entry {x} is not a non-negative integer"))
}

/// Closure of the generators under composition, as a Cayley table on the
/// generated permutations. Index 0 is the identity; the rest follow in
/// breadth-first order. Products apply the left factor first.
pub fn perm_group(gens: &[Vec<usize>], cap: usize) -> std::result::Result<Group, String> {
    let degree = gens.first().map_or(0, Vec::len);
    for (k, g) in gens.iter().enumerate() {
        if g.len() != degree {
            return Err(format!("generator {k} has degree {}, expected {degree}", g.len()));
        }
        let mut seen = vec![false; degree];
        for &x in g {
            if x >= degree || std::mem::replace(&mut seen[x], true) {
                return Err(format!("generator {k} is not a permutation of 0..{degree}"));
            }
        }
    }
    let compose = |a: &[usize], b: &[usize]| -> Vec<usize> { a.iter().map(|&x| b[x]).collect() };

    let mut elems: Vec<Vec<usize>> = vec![(0..degree).collect()];
    let mut index: HashMap<Vec<usize>, usize> = HashMap::from([(elems[0].clone(), 0)]);
    let mut head = 0;
    while head < elems.len() {
        for g in gens {
            let next = compose(&elems[head], g);
            if !index.contains_key(&next) {
                if elems.len() == cap {
                    return Err(cdlat_core::Error::OrderCap { order: cap + 1, cap }.to_string());
                }
                index.insert(next.clone(), elems.len());
                elems.push(next);
            }
        }
        head += 1;
    }
    let n = elems.len();
    let mut table = Vec::with_capacity(n * n);
    for a in &elems {
        for b in &elems {
            table.push(index[&compose(a, b)] as u32);
        }
    }
    Group::from_table(n, table, "").map_err(|e| e.to_string())
}

pub fn parse_catalog(text: &str) -> Result<Vec<Group>> {
    let mut out = Vec::new();
    for (i, line) in text.lines().enumerate() {
        let line_no = i + 1;
        let trimmed = line.trim();
        if trimmed.is_empty() || trimmed.starts_with('#') {
            continue;
        }
        let entry: CatalogEntry = serde_json::from_str(trimmed).map_err(|e| HarnessError::Catalog {
            line: line_no,
            name: guess_name(trimmed),
            msg: e.to_string(),
        })?;
        let g = entry.build().map_err(|msg| HarnessError::Catalog {
            line: line_no,
            name: entry.name.clone(),
            msg,
        })?;
        out.push(g);
    }
    Ok(out)
}

fn guess_name(line: &str) -> String {
    serde_json::from_str::<Value>(line)
        .ok()
        .and_then(|v| v.get("name").and_then(Value::as_str).map(str::to_string))
        .unwrap_or_else(|| "?".into())
}

pub fn load_catalog(path: &Path) -> Result<Vec<Group>> {
    let text = fs::read_to_string(path).map_err(|e| HarnessError::io(path, e))?;
    parse_catalog(&text)
}

#[cfg(test)]
mod tests {
    use super::*;
    use cdlat_core::constructors::dihedral;

    #[test]
    fn perm_entry() {
        let gs = parse_catalog(r#"{"name":"C5","kind":"perm","data":[[1,2,3,4,0]]}"#).unwrap();
        assert_eq!(gs.len(), 1);
        assert_eq!(gs[0].order(), 5);
        assert_eq!(gs[0].label(), "C5");
    }

    #[test]
    fn perm_group_s3_and_trivial() {
        let s3 = perm_group(&[vec![1, 0, 2], vec![1, 2, 0]], 100).unwrap();
        assert_eq!(s3.order(), 6);
        assert!(!s3.is_abelian());
        assert_eq!(perm_group(&[], 10).unwrap().order(), 1);
        assert!(perm_group(&[vec![0, 0]], 10).is_err());
        assert!(perm_group(&[vec![1, 2, 3, 4, 5, 0]], 4).is_err());
    }

    #[test]
    fn table_round_trip() {
        let d8 = dihedral(8).unwrap();
        let line = CatalogEntry::from_group(&d8, "D8").to_json_line();
        let back = parse_catalog(&line).unwrap();
        assert_eq!(back[0].table(), d8.table());
        assert_eq!(CatalogEntry::from_group(&back[0], "D8").to_json_line(), line);
    }

    #[test]
    fn nested_rows_accepted() {
        let gs = parse_catalog(r#"{"name":"C2","kind":"table","data":[[0,1],[1,0]]}"#).unwrap();
        assert_eq!(gs[0].order(), 2);
    }

    #[test]
    fn rejects_bad_entries() {
        let bad_assoc = r#"{"name":"loop","kind":"table","data":[0,1,2,3,4, 1,0,3,4,2, 2,4,0,1,3, 3,2,4,0,1, 4,3,1,2,0]}"#;
        let err = parse_catalog(&format!("\n{bad_assoc}")).unwrap_err();
        match err {
            HarnessError::Catalog { line, name, .. } => {
                assert_eq!(line, 2);
                assert_eq!(name, "loop");
            }
            e => panic!("unexpected {e}"),
        }
        let wrong_order = r#"{"name":"x","kind":"builtin","data":"cyclic 4","order":5}"#;
        assert!(parse_catalog(wrong_order).is_err());
        assert!(parse_catalog("{not json").is_err());
    }

    #[test]
    fn presentation_and_builtin_entries() {
        let text = concat!(
            r#"{"name":"Q8","kind":"presentation","data":"gens a, b; rels a^4, b^2 = a^2, b^-1*a*b = a^-1;"}"#,
            "\n",
            r#"{"name":"D8","kind":"builtin","data":"dihedral 8","order":8}"#
        );
        let gs = parse_catalog(text).unwrap();
        assert_eq!(gs.iter().map(Group::order).collect::<Vec<_>>(), vec![8, 8]);
    }
}
