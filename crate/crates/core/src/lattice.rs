//! Subgroup lattices: enumeration, meets and joins, Hasse diagrams, and
//! lattice-theoretic predicates on subsets of subgroups.

use std::collections::HashMap;
use std::fmt::Write as _;

use crate::bits::ElemSet;
use crate::group::{Group, Subgroup};
use crate::{Error, Result};

pub const DEFAULT_SUBGROUP_LIMIT: usize = 100_000;

/// Every subgroup of a group, sorted by `(size, bitset)`, with the covering
/// relation. Index `0` is the trivial subgroup and the last index is the
/// whole group.
#[derive(Clone, Debug)]
pub struct SubgroupLattice {
    subgroups: Vec<Subgroup>,
    gens: Vec<Vec<usize>>,
    index: HashMap<ElemSet, usize>,
    hasse: Vec<(usize, usize)>,
    upper_covers: Vec<Vec<usize>>,
    lower_covers: Vec<Vec<usize>>,
}

/// Smallest subgroup containing `seed`.
pub fn generated_subgroup(g: &Group, seed: &[usize]) -> Result<Subgroup> {
    for &x in seed {
        g.check_index(x)?;
    }
    Ok(g.closure(seed.iter().copied()))
}

pub fn enumerate_subgroups(g: &Group) -> Result<SubgroupLattice> {
    enumerate_subgroups_with_limit(g, DEFAULT_SUBGROUP_LIMIT)
}

/// Join-closure enumeration: start from the cyclic subgroups and join every
/// known subgroup with every cyclic subgroup until nothing new appears.
pub fn enumerate_subgroups_with_limit(g: &Group, limit: usize) -> Result<SubgroupLattice> {
    let n = g.order();
    let mut found: Vec<(Subgroup, Vec<usize>)> = vec![(g.trivial_subgroup(), vec![])];
    let mut index: HashMap<ElemSet, usize> = HashMap::new();
    index.insert(found[0].0.bits().clone(), 0);

    let mut cyclic_gens = Vec::new();
    for x in 1..n {
        let c = g.closure([x]);
        if !index.contains_key(c.bits()) {
            index.insert(c.bits().clone(), found.len());
            found.push((c, vec![x]));
            cyclic_gens.push(x);
        }
    }
    if found.len() > limit {
        return Err(Error::SubgroupLimit { limit });
    }

    let mut i = 0;
    while i < found.len() {
        let (h, h_gens) = found[i].clone();
        let h_elems = h.elements();
        let mut covered = h.bits().clone();
        for &x in &cyclic_gens {
            if covered.contains(x) {
                continue;
            }
            for &y in &h_elems {
                covered.insert(g.mul(y, x));
                covered.insert(g.mul(x, y));
            }
            let k = g.join_with(&h, &h_gens, &[x]);
            if !index.contains_key(k.bits()) {
                if found.len() >= limit {
                    return Err(Error::SubgroupLimit { limit });
                }
                index.insert(k.bits().clone(), found.len());
                let mut k_gens = h_gens.clone();
                k_gens.push(x);
                found.push((k, k_gens));
            }
        }
        i += 1;
    }

    found.sort_by(|a, b| a.0.cmp(&b.0));
    let (subgroups, gens): (Vec<Subgroup>, Vec<Vec<usize>>) = found.into_iter().unzip();
    Ok(SubgroupLattice::from_sorted(subgroups, gens))
}

impl SubgroupLattice {
    fn from_sorted(subgroups: Vec<Subgroup>, gens: Vec<Vec<usize>>) -> Self {
        let index = subgroups
            .iter()
            .enumerate()
            .map(|(i, s)| (s.bits().clone(), i))
            .collect();
        let len = subgroups.len();
        let mut upper_covers = vec![Vec::new(); len];
        let mut lower_covers = vec![Vec::new(); len];
        let mut hasse = Vec::new();
        for k in 0..len {
            let big = &subgroups[k];
            let mut maximal: Vec<usize> = Vec::new();
            for i in (0..k).rev() {
                let s = &subgroups[i];
                if s.size() == big.size() || !big.size().is_multiple_of(s.size()) || !s.is_subgroup_of(big) {
                    continue;
                }
                if maximal.iter().all(|&m| !s.is_subgroup_of(&subgroups[m])) {
                    maximal.push(i);
                }
            }
            maximal.sort_unstable();
            for &i in &maximal {
                hasse.push((i, k));
                upper_covers[i].push(k);
            }
            lower_covers[k] = maximal;
        }
        hasse.sort_unstable();
        SubgroupLattice {
            subgroups,
            gens,
            index,
            hasse,
            upper_covers,
            lower_covers,
        }
    }

    pub fn len(&self) -> usize {
        self.subgroups.len()
    }

    pub fn is_empty(&self) -> bool {
        self.subgroups.is_empty()
    }

    pub fn subgroups(&self) -> &[Subgroup] {
        &self.subgroups
    }

    pub fn get(&self, i: usize) -> &Subgroup {
        &self.subgroups[i]
    }

    /// Generators recorded during enumeration.
    pub fn generators(&self, i: usize) -> &[usize] {
        &self.gens[i]
    }

    pub fn index_of(&self, bits: &ElemSet) -> Option<usize> {
        self.index.get(bits).copied()
    }

    /// Index of a subgroup known to belong to this lattice.
    pub fn position(&self, h: &Subgroup) -> usize {
        self.index_of(h.bits())
            .expect("subgroup missing from a complete lattice")
    }

    pub fn trivial(&self) -> usize {
        0
    }

    pub fn top(&self) -> usize {
        self.subgroups.len() - 1
    }

    /// Covering pairs `(child, parent)`, sorted.
    pub fn hasse(&self) -> &[(usize, usize)] {
        &self.hasse
    }

    pub fn upper_covers(&self, i: usize) -> &[usize] {
        &self.upper_covers[i]
    }

    pub fn lower_covers(&self, i: usize) -> &[usize] {
        &self.lower_covers[i]
    }

    /// True when subgroup `i` is contained in subgroup `j`.
    pub fn le(&self, i: usize, j: usize) -> bool {
        self.subgroups[i].is_subgroup_of(&self.subgroups[j])
    }

    pub fn meet(&self, i: usize, j: usize) -> usize {
        let bits = self.subgroups[i].bits().intersection(self.subgroups[j].bits());
        self.index_of(&bits)
            .expect("lattice is closed under intersection")
    }

    pub fn join(&self, g: &Group, i: usize, j: usize) -> usize {
        if self.le(i, j) {
            return j;
        }
        if self.le(j, i) {
            return i;
        }
        let k = g.join_with(&self.subgroups[i], &self.gens[i], &self.gens[j]);
        self.position(&k)
    }

    pub fn maximal_subgroups(&self) -> &[usize] {
        &self.lower_covers[self.top()]
    }

    /// Intersection of the maximal subgroups; the whole group when there are
    /// none (trivial group).
    pub fn frattini(&self) -> Subgroup {
        let mut bits = self.subgroups[self.top()].bits().clone();
        for &m in self.maximal_subgroups() {
            bits.intersect_with(self.subgroups[m].bits());
        }
        self.subgroups[self.index_of(&bits).expect("intersection is a subgroup")].clone()
    }

    pub fn normal_subgroups(&self, g: &Group) -> Vec<usize> {
        (0..self.len())
            .filter(|&i| g.is_normal(&self.subgroups[i]))
            .collect()
    }

    pub fn of_size(&self, size: usize) -> impl Iterator<Item = usize> + '_ {
        (0..self.len()).filter(move |&i| self.subgroups[i].size() == size)
    }

    /// Hasse diagram in Graphviz DOT. Labels show `|H|` and, when given, the
    /// measure; highlighted nodes are filled.
    pub fn to_dot(&self, name: &str, measures: Option<&[u64]>, highlight: &[usize]) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "graph \"{}\" {{", name.replace('"', "'"));
        let _ = writeln!(out, "  rankdir=BT;");
        let _ = writeln!(out, "  node [shape=box];");
        for (i, s) in self.subgroups.iter().enumerate() {
            let label = match measures {
                Some(m) => format!("{}: |H|={} m={}", i, s.size(), m[i]),
                None => format!("{}: |H|={}", i, s.size()),
            };
            let style = if highlight.contains(&i) {
                ", style=filled, fillcolor=lightblue"
            } else {
                ""
            };
            let _ = writeln!(out, "  n{i} [label=\"{label}\"{style}];");
        }
        for &(c, p) in &self.hasse {
            let _ = writeln!(out, "  n{c} -- n{p};");
        }
        out.push_str("}\n");
        out
    }
}

/// True when `subset` is closed under intersection and join.
pub fn is_sublattice(g: &Group, lat: &SubgroupLattice, subset: &[usize]) -> bool {
    let mut member = vec![false; lat.len()];
    for &i in subset {
        member[i] = true;
    }
    subset.iter().enumerate().all(|(a, &i)| {
        subset[a..]
            .iter()
            .all(|&j| member[lat.meet(i, j)] && member[lat.join(g, i, j)])
    })
}

/// Checks the modular law `x v (y ^ z) = (x v y) ^ z` for all `x <= z` in
/// the sublattice `subset`.
pub fn is_modular(g: &Group, lat: &SubgroupLattice, subset: &[usize]) -> Result<bool> {
    if !is_sublattice(g, lat, subset) {
        return Err(Error::NotSublattice);
    }
    let s = subset.len();
    let mut local = HashMap::new();
    for (a, &i) in subset.iter().enumerate() {
        local.insert(i, a);
    }
    let mut meet = vec![0usize; s * s];
    let mut join = vec![0usize; s * s];
    for a in 0..s {
        for b in a..s {
            let m = local[&lat.meet(subset[a], subset[b])];
            let j = local[&lat.join(g, subset[a], subset[b])];
            meet[a * s + b] = m;
            meet[b * s + a] = m;
            join[a * s + b] = j;
            join[b * s + a] = j;
        }
    }
    for x in 0..s {
        for z in 0..s {
            if !lat.le(subset[x], subset[z]) {
                continue;
            }
            for y in 0..s {
                let lhs = join[x * s + meet[y * s + z]];
                let rhs = meet[join[x * s + y] * s + z];
                if lhs != rhs {
                    return Ok(false);
                }
            }
        }
    }
    Ok(true)
}

/// True when `subset` is `{min, max}` plus an antichain of exactly `w`
/// elements lying strictly between them.
pub fn is_quasi_antichain_width(lat: &SubgroupLattice, subset: &[usize], w: usize) -> bool {
    if w == 0 || subset.len() != w + 2 {
        return false;
    }
    let Some(&min) = subset.iter().find(|&&a| subset.iter().all(|&b| lat.le(a, b))) else {
        return false;
    };
    let Some(&max) = subset.iter().find(|&&a| subset.iter().all(|&b| lat.le(b, a))) else {
        return false;
    };
    let middle: Vec<usize> = subset.iter().copied().filter(|&x| x != min && x != max).collect();
    middle.len() == w
        && middle
            .iter()
            .all(|&a| middle.iter().all(|&b| a == b || (!lat.le(a, b) && !lat.le(b, a))))
}
