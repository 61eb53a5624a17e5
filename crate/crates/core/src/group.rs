//! Immutable finite groups stored as dense multiplication tables.

use std::fmt;
use std::sync::OnceLock;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::bits::ElemSet;
use crate::{Error, Result};

/// Largest order any constructor will build unless given an explicit cap.
pub const DEFAULT_ORDER_CAP: usize = 4096;

/// Tables up to this order are checked for associativity on every triple.
const EXHAUSTIVE_ASSOCIATIVITY_LIMIT: usize = 512;
const RANDOM_ASSOCIATIVITY_TRIPLES: usize = 10_000;

/// A finite group on the element indices `0..order`, identity at `0`.
///
/// `table[i * order + j]` is the index of `g_i * g_j`. Construction validates
/// the table (identity row and column, Latin square, associativity), so every
/// `Group` value satisfies the group axioms.
#[derive(Clone)]
pub struct Group {
    order: usize,
    table: Vec<u32>,
    inverses: Vec<u32>,
    label: String,
    elem_centralizers: OnceLock<Vec<ElemSet>>,
}

impl fmt::Debug for Group {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Group")
            .field("label", &self.label)
            .field("order", &self.order)
            .finish()
    }
}

impl Group {
    /// Builds a group from a row-major table, validating every invariant.
    pub fn from_table(order: usize, table: Vec<u32>, label: impl Into<String>) -> Result<Group> {
        if order == 0 {
            return Err(Error::InvalidTable("order must be positive".into()));
        }
        if table.len() != order * order {
            return Err(Error::InvalidTable(format!(
                "expected {} entries, found {}",
                order * order,
                table.len()
            )));
        }
        if let Some(&bad) = table.iter().find(|&&x| x as usize >= order) {
            return Err(Error::InvalidTable(format!("entry {bad} out of range")));
        }
        for i in 0..order {
            if table[i] as usize != i || table[i * order] as usize != i {
                return Err(Error::InvalidTable(format!(
                    "element 0 is not a two-sided identity (fails at {i})"
                )));
            }
        }
        check_latin(order, &table)?;
        check_associative(order, &table)?;

        let mut inverses = vec![0u32; order];
        for i in 0..order {
            let row = &table[i * order..(i + 1) * order];
            // Latin rows guarantee exactly one solution of i*j = 0.
            let j = row.iter().position(|&x| x == 0).unwrap();
            inverses[i] = j as u32;
        }
        Ok(Group {
            order,
            table,
            inverses,
            label: label.into(),
            elem_centralizers: OnceLock::new(),
        })
    }

    pub fn trivial() -> Group {
        Group::from_table(1, vec![0], "C1").unwrap()
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn with_label(mut self, label: impl Into<String>) -> Group {
        self.label = label.into();
        self
    }

    /// Row-major multiplication table.
    pub fn table(&self) -> &[u32] {
        &self.table
    }

    pub fn identity(&self) -> usize {
        0
    }

    #[inline]
    pub fn mul(&self, i: usize, j: usize) -> usize {
        self.table[i * self.order + j] as usize
    }

    #[inline]
    pub fn inv(&self, i: usize) -> usize {
        self.inverses[i] as usize
    }

    /// Checked product of two elements.
    pub fn multiply(&self, i: usize, j: usize) -> Result<usize> {
        self.check_index(i)?;
        self.check_index(j)?;
        Ok(self.mul(i, j))
    }

    pub fn check_index(&self, i: usize) -> Result<()> {
        if i < self.order {
            Ok(())
        } else {
            Err(Error::IndexOutOfRange {
                index: i,
                order: self.order,
            })
        }
    }

    pub fn pow(&self, i: usize, k: usize) -> usize {
        let mut acc = 0;
        for _ in 0..k {
            acc = self.mul(acc, i);
        }
        acc
    }

    /// `x^-1 y^-1 x y`
    pub fn commutator(&self, x: usize, y: usize) -> usize {
        let a = self.mul(self.inv(x), self.inv(y));
        self.mul(self.mul(a, x), y)
    }

    pub fn element_order(&self, i: usize) -> Result<usize> {
        self.check_index(i)?;
        Ok(self.order_of(i))
    }

    pub(crate) fn order_of(&self, i: usize) -> usize {
        let mut k = 1;
        let mut x = i;
        while x != 0 {
            x = self.mul(x, i);
            k += 1;
        }
        k
    }

    pub fn element_orders(&self) -> Vec<usize> {
        (0..self.order).map(|i| self.order_of(i)).collect()
    }

    pub fn is_abelian(&self) -> bool {
        (0..self.order).all(|i| (i + 1..self.order).all(|j| self.mul(i, j) == self.mul(j, i)))
    }

    pub fn is_cyclic(&self) -> bool {
        (0..self.order).any(|i| self.order_of(i) == self.order)
    }

    /// Centralizer of a single element, cached for the lifetime of the group.
    pub fn element_centralizer(&self, i: usize) -> &ElemSet {
        &self.elem_centralizers.get_or_init(|| {
            let n = self.order;
            let mut out = vec![ElemSet::new(n); n];
            for x in 0..n {
                for y in x..n {
                    if self.mul(x, y) == self.mul(y, x) {
                        out[x].insert(y);
                        out[y].insert(x);
                    }
                }
            }
            out
        })[i]
    }

    pub fn whole(&self) -> Subgroup {
        Subgroup::from_closed(ElemSet::full(self.order))
    }

    pub fn trivial_subgroup(&self) -> Subgroup {
        Subgroup::from_closed(ElemSet::from_indices(self.order, [0]))
    }

    /// Validates that `bits` is closed under products and inverses.
    pub fn subgroup(&self, bits: ElemSet) -> Result<Subgroup> {
        if bits.universe() != self.order {
            return Err(Error::NotClosed("bitset length differs from group order".into()));
        }
        if !bits.contains(0) {
            return Err(Error::NotClosed("identity missing".into()));
        }
        let members = bits.to_vec();
        for &x in &members {
            if !bits.contains(self.inv(x)) {
                return Err(Error::NotClosed(format!("inverse of {x} missing")));
            }
            for &y in &members {
                if !bits.contains(self.mul(x, y)) {
                    return Err(Error::NotClosed(format!("product {x}*{y} missing")));
                }
            }
        }
        let sub = Subgroup::from_closed(bits);
        if !self.order.is_multiple_of(sub.size()) {
            return Err(Error::Consistency("subgroup order does not divide group order".into()));
        }
        Ok(sub)
    }

    /// `<H, extra>`, given generators of `H`. The result is assembled as a
    /// union of right cosets `H c`, so only coset representatives are
    /// multiplied by generators.
    pub(crate) fn join_with(&self, h: &Subgroup, h_gens: &[usize], extra: &[usize]) -> Subgroup {
        if extra.iter().all(|&x| h.contains(x)) {
            return h.clone();
        }
        let h_elems = h.elements();
        let gens: Vec<usize> = h_gens
            .iter()
            .chain(extra)
            .copied()
            .filter(|&x| x != 0)
            .collect();
        let mut bits = h.bits.clone();
        let mut reps = vec![0usize];
        let mut r = 0;
        while r < reps.len() {
            let c = reps[r];
            r += 1;
            for &s in &gens {
                let y = self.mul(c, s);
                if !bits.contains(y) {
                    for &x in &h_elems {
                        bits.insert(self.mul(x, y));
                    }
                    reps.push(y);
                }
            }
        }
        Subgroup::from_closed(bits)
    }

    /// Smallest subgroup containing `seed`.
    pub fn closure<I: IntoIterator<Item = usize>>(&self, seed: I) -> Subgroup {
        let mut cur = self.trivial_subgroup();
        let mut gens = Vec::new();
        for x in seed {
            if !cur.contains(x) {
                cur = self.join_with(&cur, &gens, &[x]);
                gens.push(x);
            }
        }
        cur
    }

    /// A generating set of `h`, chosen greedily by increasing element index.
    pub fn generators(&self, h: &Subgroup) -> Vec<usize> {
        let mut cur = self.trivial_subgroup();
        let mut gens = Vec::new();
        for x in h.elements() {
            if !cur.contains(x) {
                cur = self.join_with(&cur, &gens, &[x]);
                gens.push(x);
                if cur.size() == h.size() {
                    break;
                }
            }
        }
        gens
    }

    pub(crate) fn centralizer_of_gens(&self, gens: &[usize]) -> Subgroup {
        let mut bits = ElemSet::full(self.order);
        for &s in gens {
            bits.intersect_with(self.element_centralizer(s));
        }
        Subgroup::from_closed(bits)
    }

    /// `C_G(H)`: elements commuting with every element of `h`.
    pub fn centralizer(&self, h: &Subgroup) -> Subgroup {
        assert_eq!(h.bits.universe(), self.order, "subgroup of a different group");
        self.centralizer_of_gens(&self.generators(h))
    }

    pub fn center(&self) -> Subgroup {
        let mut bits = ElemSet::new(self.order);
        for x in 0..self.order {
            if self.element_centralizer(x).count() == self.order {
                bits.insert(x);
            }
        }
        Subgroup::from_closed(bits)
    }

    /// `[A, B]`, the subgroup generated by all `[a, b]`.
    pub fn commutator_of(&self, a: &Subgroup, b: &Subgroup) -> Subgroup {
        let b_elems = b.elements();
        let mut comms = ElemSet::new(self.order);
        for x in a.elements() {
            for &y in &b_elems {
                comms.insert(self.commutator(x, y));
            }
        }
        self.closure(comms.iter())
    }

    /// `G'`
    pub fn commutator_subgroup(&self) -> Subgroup {
        let g = self.whole();
        self.commutator_of(&g, &g)
    }

    /// `G = γ1 > γ2 > ...`, stopping at the trivial group or where the
    /// series stabilizes.
    pub fn lower_central_series(&self) -> Series {
        let g = self.whole();
        let mut terms = vec![g.clone()];
        loop {
            let last = terms.last().unwrap();
            if last.size() == 1 {
                break;
            }
            let next = self.commutator_of(last, &g);
            if next.size() == last.size() {
                break;
            }
            terms.push(next);
        }
        Series { terms }
    }

    /// Length of the lower central series; `None` when the group is not
    /// nilpotent. The trivial group has class 0.
    pub fn nilpotence_class(&self) -> Option<usize> {
        let s = self.lower_central_series();
        if s.terms.last().unwrap().size() == 1 {
            Some(s.terms.len() - 1)
        } else {
            None
        }
    }

    /// Intersection of all maximal subgroups.
    pub fn frattini_subgroup(&self) -> Result<Subgroup> {
        let lat = crate::lattice::enumerate_subgroups(self)?;
        Ok(lat.frattini())
    }

    pub fn is_normal(&self, h: &Subgroup) -> bool {
        let gens = self.generators(h);
        (0..self.order).all(|x| {
            let xi = self.inv(x);
            gens.iter().all(|&y| h.contains(self.mul(self.mul(x, y), xi)))
        })
    }

    /// `G / N` on cosets numbered by their least element; the identity
    /// coset is `0`.
    pub fn quotient(&self, n: &Subgroup) -> Result<Group> {
        if !self.is_normal(n) {
            return Err(Error::NotNormal);
        }
        let members = n.elements();
        let mut coset_of = vec![usize::MAX; self.order];
        let mut reps = Vec::new();
        for x in 0..self.order {
            if coset_of[x] == usize::MAX {
                for &y in &members {
                    coset_of[self.mul(x, y)] = reps.len();
                }
                reps.push(x);
            }
        }
        let k = reps.len();
        let mut table = Vec::with_capacity(k * k);
        for &a in &reps {
            for &b in &reps {
                table.push(coset_of[self.mul(a, b)] as u32);
            }
        }
        Group::from_table(k, table, format!("{}/N{}", self.label, n.size()))
    }

    /// Image of `g` under conjugation by `x`: `x g x^-1`.
    pub fn conjugate(&self, x: usize, g: usize) -> usize {
        self.mul(self.mul(x, g), self.inv(x))
    }
}

fn check_latin(n: usize, table: &[u32]) -> Result<()> {
    let mut seen = vec![0usize; n];
    let mut stamp = 0;
    for i in 0..n {
        stamp += 1;
        for j in 0..n {
            let v = table[i * n + j] as usize;
            if seen[v] == stamp {
                return Err(Error::InvalidTable(format!("row {i} repeats {v}")));
            }
            seen[v] = stamp;
        }
    }
    for j in 0..n {
        stamp += 1;
        for i in 0..n {
            let v = table[i * n + j] as usize;
            if seen[v] == stamp {
                return Err(Error::InvalidTable(format!("column {j} repeats {v}")));
            }
            seen[v] = stamp;
        }
    }
    Ok(())
}

fn check_associative(n: usize, t: &[u32]) -> Result<()> {
    let m = |a: usize, b: usize| t[a * n + b] as usize;
    let fail = |i, j, k| Err(Error::InvalidTable(format!("not associative at ({i},{j},{k})")));
    if n <= EXHAUSTIVE_ASSOCIATIVITY_LIMIT {
        for i in 0..n {
            for j in 0..n {
                let ij = m(i, j);
                let row_ij = &t[ij * n..(ij + 1) * n];
                let row_i = &t[i * n..(i + 1) * n];
                for k in 0..n {
                    if row_ij[k] != row_i[m(j, k)] {
                        return fail(i, j, k);
                    }
                }
            }
        }
    } else {
        let mut rng = ChaCha8Rng::seed_from_u64(n as u64);
        for _ in 0..RANDOM_ASSOCIATIVITY_TRIPLES {
            let (i, j, k) = (rng.gen_range(0..n), rng.gen_range(0..n), rng.gen_range(0..n));
            if m(m(i, j), k) != m(i, m(j, k)) {
                return fail(i, j, k);
            }
        }
    }
    Ok(())
}

/// A subgroup of some parent group, stored as a membership bitset over the
/// parent's element indices. Values are only produced by operations that
/// guarantee closure.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Subgroup {
    size: usize,
    bits: ElemSet,
}

impl fmt::Debug for Subgroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Subgroup(|H|={}, {:?})", self.size, self.bits)
    }
}

impl Subgroup {
    pub(crate) fn from_closed(bits: ElemSet) -> Subgroup {
        Subgroup {
            size: bits.count(),
            bits,
        }
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn bits(&self) -> &ElemSet {
        &self.bits
    }

    pub fn contains(&self, i: usize) -> bool {
        self.bits.contains(i)
    }

    pub fn elements(&self) -> Vec<usize> {
        self.bits.to_vec()
    }

    pub fn is_trivial(&self) -> bool {
        self.size == 1
    }

    pub fn is_subgroup_of(&self, other: &Subgroup) -> bool {
        self.bits.is_subset(&other.bits)
    }

    pub fn intersection(&self, other: &Subgroup) -> Subgroup {
        Subgroup::from_closed(self.bits.intersection(&other.bits))
    }

    pub fn is_abelian_in(&self, g: &Group) -> bool {
        self.is_subgroup_of(&g.centralizer(self))
    }
}

/// A strictly descending chain of subgroups starting at the whole group.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Series {
    pub terms: Vec<Subgroup>,
}

impl Series {
    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }
}

/// `A x B` with `(i, j)` stored at index `i * |B| + j`.
pub fn direct_product(a: &Group, b: &Group) -> Result<Group> {
    direct_product_with_cap(a, b, DEFAULT_ORDER_CAP)
}

pub fn direct_product_with_cap(a: &Group, b: &Group, cap: usize) -> Result<Group> {
    let (na, nb) = (a.order(), b.order());
    let n = na * nb;
    if n > cap {
        return Err(Error::OrderCap { order: n, cap });
    }
    let mut table = Vec::with_capacity(n * n);
    for i in 0..n {
        let (ia, ib) = (i / nb, i % nb);
        for j in 0..n {
            let (ja, jb) = (j / nb, j % nb);
            table.push((a.mul(ia, ja) * nb + b.mul(ib, jb)) as u32);
        }
    }
    Group::from_table(n, table, format!("{}x{}", a.label(), b.label()))
}

/// `E * A`: the direct product modulo `{(z^k, w^-k)}`, where `z` is the least
/// non-identity element of `Z(E)` and `w` the least non-identity element of
/// the order-`p` subgroup of the cyclic group `Z(A)`.
pub fn central_product(e: &Group, a: &Group) -> Result<Group> {
    let ze = e.center();
    let p = ze.size();
    if !crate::arith::is_prime(p as u64) {
        return Err(Error::Precondition(format!(
            "central product needs |Z(E)| prime, found {p}"
        )));
    }
    let za = a.center();
    let za_elems = za.elements();
    let Some(&gen_a) = za_elems.iter().find(|&&x| a.order_of(x) == za.size()) else {
        return Err(Error::Precondition("central product needs Z(A) cyclic".into()));
    };
    if !za.size().is_multiple_of(p) {
        return Err(Error::Precondition(format!(
            "|Z(A)| = {} is not divisible by {p}",
            za.size()
        )));
    }
    let w0 = a.pow(gen_a, za.size() / p);
    let order_p: Vec<usize> = (1..p).map(|k| a.pow(w0, k)).collect();
    let w = *order_p.iter().min().unwrap();
    let z = ze.elements()[1];

    let d = direct_product(e, a)?;
    let nb = a.order();
    let n_bits = ElemSet::from_indices(
        d.order(),
        (0..p).map(|k| e.pow(z, k) * nb + a.inv(a.pow(w, k))),
    );
    let n = d.subgroup(n_bits)?;
    Ok(d.quotient(&n)?.with_label(format!("{}*{}", e.label(), a.label())))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructors::{cyclic, dihedral, generalized_quaternion};

    #[test]
    fn rejects_bad_tables() {
        assert!(matches!(
            Group::from_table(2, vec![0, 1, 1, 1], "x"),
            Err(Error::InvalidTable(_))
        ));
        assert!(Group::from_table(2, vec![0, 1], "x").is_err());
        assert!(Group::from_table(0, vec![], "x").is_err());
        // Latin square with identity 0 that is not associative (order 5 loop).
        let loop5 = vec![
            0, 1, 2, 3, 4, //
            1, 0, 3, 4, 2, //
            2, 4, 0, 1, 3, //
            3, 2, 4, 0, 1, //
            4, 3, 1, 2, 0,
        ];
        let err = Group::from_table(5, loop5, "loop").unwrap_err();
        assert!(err.to_string().contains("associative"), "{err}");
    }

    #[test]
    fn cyclic_multiply_and_orders() {
        let c4 = cyclic(4).unwrap();
        assert_eq!(c4.multiply(1, 2).unwrap(), 3);
        assert_eq!(c4.multiply(0, 3).unwrap(), 3);
        assert!(matches!(c4.multiply(4, 0), Err(Error::IndexOutOfRange { .. })));
        assert_eq!(c4.element_order(0).unwrap(), 1);
        assert_eq!(c4.element_order(2).unwrap(), 2);
        for g in [c4, dihedral(12).unwrap()] {
            for (i, o) in g.element_orders().into_iter().enumerate() {
                assert_eq!(g.order() % o, 0, "order of {i}");
                assert_eq!(g.inv(g.inv(i)), i);
            }
        }
    }

    #[test]
    fn centralizers_and_center() {
        let q8 = generalized_quaternion(3).unwrap();
        assert_eq!(q8.centralizer(&q8.trivial_subgroup()).size(), 8);
        // Every order-4 subgroup of Q8 is cyclic and self-centralizing.
        let a = (0..8).find(|&x| q8.order_of(x) == 4).unwrap();
        let ha = q8.closure([a]);
        assert_eq!(q8.centralizer(&ha), ha);
        assert_eq!(q8.center().size(), 2);
        let d16 = dihedral(16).unwrap();
        assert_eq!(d16.center().size(), 2);
        assert!(cyclic(7).unwrap().center().size() == 7);
    }

    #[test]
    fn commutators_and_class() {
        assert!(cyclic(6).unwrap().commutator_subgroup().is_trivial());
        assert_eq!(cyclic(6).unwrap().nilpotence_class(), Some(1));
        assert_eq!(Group::trivial().nilpotence_class(), Some(0));
        let d8 = dihedral(8).unwrap();
        assert_eq!(d8.nilpotence_class(), Some(2));
        assert_eq!(d8.commutator_subgroup().size(), 2);
        // S3 is not nilpotent: its lower central series stops at C3.
        let s3 = dihedral(6).unwrap();
        assert_eq!(s3.nilpotence_class(), None);
        assert_eq!(s3.lower_central_series().terms.last().unwrap().size(), 3);
    }

    #[test]
    fn frattini_examples() {
        assert!(cyclic(5).unwrap().frattini_subgroup().unwrap().is_trivial());
        assert_eq!(cyclic(9).unwrap().frattini_subgroup().unwrap().size(), 3);
        assert_eq!(dihedral(8).unwrap().frattini_subgroup().unwrap().size(), 2);
        assert_eq!(Group::trivial().frattini_subgroup().unwrap().size(), 1);
    }

    #[test]
    fn normality_and_quotients() {
        let s3 = dihedral(6).unwrap();
        let refl = (0..6).find(|&x| s3.order_of(x) == 2).unwrap();
        let h = s3.closure([refl]);
        assert!(!s3.is_normal(&h));
        assert!(matches!(s3.quotient(&h), Err(Error::NotNormal)));
        let rot = s3.closure([(0..6).find(|&x| s3.order_of(x) == 3).unwrap()]);
        assert!(s3.is_normal(&rot));
        assert!(s3.is_normal(&s3.center()));
        assert_eq!(s3.quotient(&s3.whole()).unwrap().order(), 1);

        let q8 = generalized_quaternion(3).unwrap();
        let q = q8.quotient(&q8.center()).unwrap();
        assert_eq!(q.order(), 4);
        assert!(q.is_abelian());
        assert!(q.element_orders().iter().all(|&o| o <= 2));
    }

    #[test]
    fn products() {
        let c2 = cyclic(2).unwrap();
        let v4 = direct_product(&c2, &c2).unwrap();
        assert_eq!(v4.order(), 4);
        assert!(!v4.is_cyclic());
        let d8 = dihedral(8).unwrap();
        let p = direct_product(&d8, &cyclic(3).unwrap()).unwrap();
        assert_eq!(p.center().size(), 2 * 3);
        assert!(matches!(
            direct_product_with_cap(&d8, &d8, 63),
            Err(Error::OrderCap { order: 64, cap: 63 })
        ));

        let c4 = cyclic(4).unwrap();
        let dc = central_product(&d8, &c4).unwrap();
        assert_eq!(dc.order(), 16);
        assert_eq!(dc.center().size(), 4);
        let dd = central_product(&d8, &d8).unwrap();
        assert_eq!(dd.order(), 32);
        assert_eq!(dd.center().size(), 2);
        assert_eq!(dd.commutator_subgroup().size(), 2);

        // Z(C6) has composite order; Z(V4) is not cyclic.
        assert!(matches!(central_product(&cyclic(6).unwrap(), &c4), Err(Error::Precondition(_))));
        assert!(matches!(central_product(&d8, &v4), Err(Error::Precondition(_))));
    }
}
