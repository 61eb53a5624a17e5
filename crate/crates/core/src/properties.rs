//! Checks of the four standard properties of the Chermak-Delgado measure,
//! plus sublattice/modularity of `CD(G)` and the two-value lower bound.
//! Each check returns a list of human-readable violations (empty = pass).

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::analysis::Analysis;
use crate::bits::ElemSet;
use crate::cd::cd_subgroup;
use crate::group::{Group, Subgroup};
use crate::lattice::{is_modular, is_sublattice};

/// Groups up to this order get P2 on every pair of subgroups.
pub const P2_EXHAUSTIVE_MAX_ORDER: usize = 32;
pub const P2_RANDOM_PAIRS: usize = 10_000;

/// `{ab : a in A, b in B}` as a set.
pub fn setwise_product(g: &Group, a: &Subgroup, b: &Subgroup) -> ElemSet {
    let b_elems = b.elements();
    let mut out = ElemSet::new(g.order());
    for x in a.elements() {
        for &y in &b_elems {
            out.insert(g.mul(x, y));
        }
    }
    out
}

/// `m(H) <= m(C(H))`, and equality forces `C(C(H)) = H`.
pub fn check_p1(a: &Analysis) -> Vec<String> {
    let mut out = Vec::new();
    for h in 0..a.lattice.len() {
        let c = a.centralizer(h);
        let (mh, mc) = (a.cd.measures[h], a.cd.measures[c]);
        if mh > mc {
            out.push(format!("m(H{h})={mh} > m(C(H))={mc}"));
        } else if mh == mc && a.centralizer(c) != h {
            out.push(format!("m(H{h}) = m(C(H)) but C(C(H)) != H"));
        }
    }
    out
}

fn check_p2_pair(a: &Analysis, h: usize, k: usize) -> Option<String> {
    let g = a.group;
    let lat = &a.lattice;
    let join = lat.join(g, h, k);
    let meet = lat.meet(h, k);
    let m = &a.cd.measures;
    let lhs = m[h] * m[k];
    let rhs = m[join] * m[meet];
    if lhs > rhs {
        return Some(format!("m(H{h})m(H{k})={lhs} > m(join)m(meet)={rhs}"));
    }
    let product_is_join = setwise_product(g, lat.get(h), lat.get(k)) == *lat.get(join).bits();
    let centralizers_factor = setwise_product(
        g,
        lat.get(a.centralizer(h)),
        lat.get(a.centralizer(k)),
    ) == *lat.get(a.centralizer(meet)).bits();
    let condition = product_is_join && centralizers_factor;
    if (lhs == rhs) != condition {
        return Some(format!(
            "pair (H{h}, H{k}): equality={} but <H,K>=HK is {product_is_join} and C(H^K)=C(H)C(K) is {centralizers_factor}",
            lhs == rhs
        ));
    }
    None
}

/// `m(H)m(K) <= m(<H,K>)m(H^K)` with the setwise equality criterion. Every
/// pair for small groups or short lattices; a seeded random sample of pairs
/// otherwise.
pub fn check_p2(a: &Analysis) -> Vec<String> {
    let n = a.lattice.len();
    let mut out = Vec::new();
    if a.order() <= P2_EXHAUSTIVE_MAX_ORDER || n * (n + 1) / 2 <= P2_RANDOM_PAIRS {
        for h in 0..n {
            for k in h..n {
                out.extend(check_p2_pair(a, h, k));
            }
        }
    } else {
        let mut rng = ChaCha8Rng::seed_from_u64(a.order() as u64 ^ n as u64);
        for _ in 0..P2_RANDOM_PAIRS {
            let (h, k) = (rng.gen_range(0..n), rng.gen_range(0..n));
            out.extend(check_p2_pair(a, h, k));
        }
        out.sort();
        out.dedup();
    }
    out
}

/// Centralizing is an involution on `CD(G)`.
pub fn check_p3(a: &Analysis) -> Vec<String> {
    let mut out = Vec::new();
    for &h in &a.cd.cd_members {
        let c = a.centralizer(h);
        if !a.cd.is_member(c) {
            out.push(format!("H{h} in CD(G) but C(H)=H{c} is not"));
        }
        if a.centralizer(c) != h {
            out.push(format!("H{h} in CD(G) but C(C(H)) != H"));
        }
    }
    out
}

/// `M(G)` is abelian, normal, and contains `Z(G)`.
pub fn check_p4(a: &Analysis) -> Vec<String> {
    match cd_subgroup(a.group, &a.lattice, &a.cd) {
        Ok(_) => Vec::new(),
        Err(e) => vec![e.to_string()],
    }
}

/// `CD(G)` is a modular sublattice.
pub fn check_p5(a: &Analysis) -> Vec<String> {
    let members = &a.cd.cd_members;
    if !is_sublattice(a.group, &a.lattice, members) {
        return vec!["CD(G) is not a sublattice".into()];
    }
    match is_modular(a.group, &a.lattice, members) {
        Ok(true) => Vec::new(),
        Ok(false) => vec!["CD(G) is not modular".into()],
        Err(e) => vec![e.to_string()],
    }
}

/// A nontrivial group's measure takes at least two values.
pub fn check_p6(a: &Analysis) -> Vec<String> {
    if !a.is_trivial() && a.cd.image.len() < 2 {
        vec![format!("measure image {:?} has fewer than two values", a.cd.image)]
    } else {
        Vec::new()
    }
}
