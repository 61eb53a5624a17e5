//! Which `(p, n)` have a group of order `p^n` in class 𝒞, among the groups
//! at hand. Findings only cover the supplied corpus.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use cdlat_core::classify::in_class_c;
use cdlat_core::{Analysis, Group};
use rayon::prelude::*;
use serde::Serialize;

use crate::error::Result;
use crate::verify::with_pool;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SearchBucket {
    pub p: u64,
    pub n: u32,
    pub examined: usize,
    pub in_class_c: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SearchReport {
    pub examined: usize,
    pub buckets: Vec<SearchBucket>,
    pub note: String,
}

pub const KNOWN_ANSWER: &str = "every odd n is realized: C_p for n = 1 and extraspecial groups of order p^(2m+1) otherwise; \
results for even n reflect only the groups searched";

impl SearchReport {
    pub fn found(&self) -> impl Iterator<Item = &str> {
        self.buckets.iter().flat_map(|b| b.in_class_c.iter().map(String::as_str))
    }

    pub fn to_text(&self) -> String {
        let mut s = String::new();
        let _ = writeln!(s, "examined {} p-groups", self.examined);
        for b in &self.buckets {
            let names = if b.in_class_c.is_empty() { "-".to_string() } else { b.in_class_c.join(", ") };
            let _ = writeln!(s, "p={} n={} examined={} in C: {names}", b.p, b.n, b.examined);
        }
        let _ = writeln!(s, "note: {}", self.note);
        s
    }
}

pub fn search_class_c(
    groups: &[Group],
    p: Option<u64>,
    n: Option<u32>,
    jobs: Option<usize>,
) -> Result<SearchReport> {
    let selected: Vec<(&Group, u64, u32)> = groups
        .iter()
        .filter(|g| g.order() > 1)
        .filter_map(|g| cdlat_core::arith::prime_power(g.order() as u64).map(|(q, k)| (g, q, k)))
        .filter(|&(_, q, k)| p.is_none_or(|p| p == q) && n.is_none_or(|n| n == k))
        .collect();
    let flags: Vec<std::result::Result<bool, cdlat_core::Error>> = with_pool(jobs, || {
        selected
            .par_iter()
            .map(|(g, _, _)| Analysis::new(g).and_then(|a| in_class_c(&a)))
            .collect()
    })?;
    let mut buckets: BTreeMap<(u64, u32), SearchBucket> = BTreeMap::new();
    for ((g, q, k), flag) in selected.iter().zip(flags) {
        let b = buckets.entry((*q, *k)).or_insert_with(|| SearchBucket {
            p: *q,
            n: *k,
            examined: 0,
            in_class_c: Vec::new(),
        });
        b.examined += 1;
        if flag? {
            b.in_class_c.push(g.label().to_string());
        }
    }
    let mut buckets: Vec<SearchBucket> = buckets.into_values().collect();
    for b in &mut buckets {
        b.in_class_c.sort();
    }
    Ok(SearchReport {
        examined: selected.len(),
        buckets,
        note: KNOWN_ANSWER.to_string(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use cdlat_core::constructors::{cyclic, dihedral, generalized_quaternion, order16_groups};

    #[test]
    fn order_eight() {
        let gs = vec![dihedral(8).unwrap(), generalized_quaternion(3).unwrap(), cyclic(8).unwrap(), cyclic(6).unwrap()];
        let r = search_class_c(&gs, Some(2), Some(3), None).unwrap();
        assert_eq!(r.buckets.len(), 1);
        assert_eq!(r.buckets[0].examined, 3);
        assert_eq!(r.buckets[0].in_class_c, vec!["D8", "Q8"]);
    }

    #[test]
    fn order_sixteen_empty() {
        let r = search_class_c(&order16_groups().unwrap(), None, None, Some(2)).unwrap();
        assert_eq!(r.examined, 14);
        assert_eq!(r.found().count(), 0);
    }
}
