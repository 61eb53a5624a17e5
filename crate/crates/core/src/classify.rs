//! Structural predicates on p-groups and the class 𝒞 membership test
//! (measure map with exactly two values).

use std::fmt::Write as _;

use serde::Serialize;

use crate::analysis::Analysis;
use crate::arith::{checked_pow, factorize};
use crate::group::Group;
use crate::{Error, Result};

/// `|Im(m_G)| = 2`. The trivial group is outside the domain.
pub fn in_class_c(a: &Analysis) -> Result<bool> {
    if a.is_trivial() {
        return Err(Error::Precondition("class C is defined for nontrivial groups".into()));
    }
    Ok(a.cd.image.len() == 2)
}

pub fn is_extraspecial(a: &Analysis) -> bool {
    let Some((p, _)) = a.prime_power else {
        return false;
    };
    let z = a.center;
    a.sub(z).size() as u64 == p && a.derived == z && a.frattini() == z
}

/// Non-abelian, and `G' <= N` for every nontrivial normal `N`.
pub fn is_outer_abelian(a: &Analysis) -> bool {
    if a.is_abelian() {
        return false;
    }
    let triv = a.lattice.trivial();
    a.normal_subgroups()
        .iter()
        .filter(|&&n| n != triv)
        .all(|&n| a.lattice.le(a.derived, n))
}

/// Same predicate, decided by building every proper quotient.
pub fn is_outer_abelian_by_quotients(a: &Analysis) -> Result<bool> {
    if a.is_abelian() {
        return Ok(false);
    }
    let triv = a.lattice.trivial();
    for &n in a.normal_subgroups() {
        if n != triv && !a.group.quotient(a.sub(n))?.is_abelian() {
            return Ok(false);
        }
    }
    Ok(true)
}

fn require_p_group(a: &Analysis) -> Result<(u64, u32)> {
    a.prime_power
        .ok_or_else(|| Error::Precondition(format!("order {} is not a prime power", a.order())))
}

/// Nilpotence class `n - 1` for `|G| = p^n`, `n >= 2`.
pub fn is_maximal_class(a: &Analysis) -> Result<bool> {
    let (_, n) = require_p_group(a)?;
    if n < 2 {
        return Err(Error::Precondition("maximal class needs order at least p^2".into()));
    }
    Ok(a.nilpotence_class == Some(n as usize - 1))
}

/// Some `A` of order `p^2` with `C_G(A) = A`; returns its lattice index.
pub fn self_centralizing_p2(a: &Analysis) -> Result<Option<usize>> {
    let (p, _) = require_p_group(a)?;
    let p2 = (p * p) as usize;
    Ok(a.lattice.of_size(p2).find(|&i| a.centralizer(i) == i))
}

pub fn unique_subgroup_order_p(a: &Analysis) -> Result<bool> {
    let (p, _) = require_p_group(a)?;
    Ok(a.lattice.of_size(p as usize).count() == 1)
}

/// Order `2^n`, `n >= 3`, one involution, an element of order `2^(n-1)`,
/// non-abelian.
pub fn quaternion_fingerprint(g: &Group) -> bool {
    let n = g.order();
    if n < 8 || !n.is_power_of_two() || g.is_abelian() {
        return false;
    }
    let orders = g.element_orders();
    orders.iter().filter(|&&o| o == 2).count() == 1 && orders.contains(&(n / 2))
}

/// Minimal members of the nontrivial normal subgroups.
pub fn minimal_normal_subgroups(a: &Analysis) -> Vec<usize> {
    let triv = a.lattice.trivial();
    let normal: Vec<usize> = a.normal_subgroups().iter().copied().filter(|&n| n != triv).collect();
    normal
        .iter()
        .copied()
        .filter(|&n| !normal.iter().any(|&m| m != n && a.lattice.le(m, n)))
        .collect()
}

/// Largest abelian subgroup, if its order reaches `p^floor((n+3)/2)`.
pub fn prop26_witness(a: &Analysis) -> Result<Option<usize>> {
    let (p, n) = require_p_group(a)?;
    if a.is_abelian() {
        return Err(Error::Precondition("group is abelian".into()));
    }
    let bound = checked_pow(p, (n + 3) / 2).unwrap_or(u64::MAX);
    Ok((0..a.lattice.len())
        .rev()
        .find(|&i| a.is_abelian_subgroup(i))
        .filter(|&i| a.sub(i).size() as u64 >= bound))
}

pub fn violates_prop26_bound(a: &Analysis) -> Result<bool> {
    prop26_witness(a).map(|w| w.is_some())
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ClassificationReport {
    pub label: String,
    pub order: usize,
    pub factorization: Vec<(u64, u32)>,
    pub is_abelian: bool,
    pub is_cyclic: bool,
    pub is_p_group: bool,
    pub p: Option<u64>,
    pub nilpotence_class: Option<usize>,
    pub is_maximal_class: Option<bool>,
    pub is_extraspecial: bool,
    pub is_outer_abelian: bool,
    /// Exactly one subgroup of order `p` (p-groups only).
    pub has_unique_minimal_subgroup: Option<bool>,
    pub has_unique_minimal_normal_subgroup: bool,
    pub in_class_c: Option<bool>,
    pub measure_image: Vec<u64>,
    pub m_star: u64,
    pub subgroup_count: usize,
    pub cd_size: usize,
    pub center_order: usize,
    pub derived_order: usize,
    pub frattini_order: usize,
    pub self_centralizing_p2: Option<Vec<usize>>,
    pub large_abelian_subgroup: Option<Vec<usize>>,
}

impl ClassificationReport {
    pub fn to_text(&self) -> String {
        fn opt<T: std::fmt::Debug>(v: &Option<T>) -> String {
            match v {
                Some(x) => format!("{x:?}"),
                None => "n/a".into(),
            }
        }
        let mut s = String::new();
        let fact: Vec<String> = self
            .factorization
            .iter()
            .map(|&(p, k)| if k == 1 { p.to_string() } else { format!("{p}^{k}") })
            .collect();
        let _ = writeln!(s, "group: {}", self.label);
        let _ = writeln!(s, "order: {} = {}", self.order, if fact.is_empty() { "1".into() } else { fact.join(" * ") });
        let _ = writeln!(s, "abelian: {}", self.is_abelian);
        let _ = writeln!(s, "cyclic: {}", self.is_cyclic);
        let _ = writeln!(s, "p-group: {}", opt(&self.p));
        let _ = writeln!(s, "nilpotence class: {}", opt(&self.nilpotence_class));
        let _ = writeln!(s, "maximal class: {}", opt(&self.is_maximal_class));
        let _ = writeln!(s, "extraspecial: {}", self.is_extraspecial);
        let _ = writeln!(s, "outer abelian: {}", self.is_outer_abelian);
        let _ = writeln!(s, "unique subgroup of order p: {}", opt(&self.has_unique_minimal_subgroup));
        let _ = writeln!(s, "unique minimal normal subgroup: {}", self.has_unique_minimal_normal_subgroup);
        let _ = writeln!(s, "|Z|, |G'|, |Phi|: {}, {}, {}", self.center_order, self.derived_order, self.frattini_order);
        let _ = writeln!(s, "subgroups: {}", self.subgroup_count);
        let _ = writeln!(s, "measure image: {:?}", self.measure_image);
        let _ = writeln!(s, "m*: {}", self.m_star);
        let _ = writeln!(s, "CD size: {}", self.cd_size);
        let _ = writeln!(s, "in class C: {}", opt(&self.in_class_c));
        if let Some(w) = &self.self_centralizing_p2 {
            let _ = writeln!(s, "self-centralizing p^2 subgroup: {w:?}");
        }
        if let Some(w) = &self.large_abelian_subgroup {
            let _ = writeln!(s, "large abelian subgroup: order {} {w:?}", w.len());
        }
        s
    }
}

pub fn classify_full(g: &Group) -> Result<ClassificationReport> {
    classify_analysis(&Analysis::new(g)?)
}

pub fn classify_analysis(a: &Analysis) -> Result<ClassificationReport> {
    let g = a.group;
    let p_group = a.prime_power;
    let n = p_group.map(|(_, n)| n).unwrap_or(0);
    let is_abelian = a.is_abelian();
    let report = ClassificationReport {
        label: g.label().to_string(),
        order: g.order(),
        factorization: factorize(g.order() as u64),
        is_abelian,
        is_cyclic: g.is_cyclic(),
        is_p_group: p_group.is_some(),
        p: p_group.map(|(p, _)| p),
        nilpotence_class: a.nilpotence_class,
        is_maximal_class: if n >= 2 { Some(is_maximal_class(a)?) } else { None },
        is_extraspecial: is_extraspecial(a),
        is_outer_abelian: is_outer_abelian(a),
        has_unique_minimal_subgroup: if p_group.is_some() {
            Some(unique_subgroup_order_p(a)?)
        } else {
            None
        },
        has_unique_minimal_normal_subgroup: minimal_normal_subgroups(a).len() == 1,
        in_class_c: if a.is_trivial() { None } else { Some(in_class_c(a)?) },
        measure_image: a.cd.image.clone(),
        m_star: a.cd.m_star,
        subgroup_count: a.lattice.len(),
        cd_size: a.cd.cd_members.len(),
        center_order: a.sub(a.center).size(),
        derived_order: a.sub(a.derived).size(),
        frattini_order: a.sub(a.frattini()).size(),
        self_centralizing_p2: if p_group.is_some() {
            self_centralizing_p2(a)?.map(|i| a.sub(i).elements())
        } else {
            None
        },
        large_abelian_subgroup: if p_group.is_some() && !is_abelian {
            prop26_witness(a)?.map(|i| a.sub(i).elements())
        } else {
            None
        },
    };
    check_consistency(&report)?;
    Ok(report)
}

fn check_consistency(r: &ClassificationReport) -> Result<()> {
    let fail = |msg: &str| Err(Error::Consistency(format!("{}: {msg}", r.label)));
    if r.is_extraspecial && !(r.is_p_group && r.nilpotence_class == Some(2)) {
        return fail("extraspecial but not a p-group of class 2");
    }
    if r.is_extraspecial && !r.is_outer_abelian {
        return fail("extraspecial but not outer abelian");
    }
    if r.is_outer_abelian && r.is_abelian {
        return fail("outer abelian group is abelian");
    }
    if r.is_cyclic && !r.is_abelian {
        return fail("cyclic group is non-abelian");
    }
    if r.in_class_c.is_some() != (r.order > 1) || (r.in_class_c == Some(true)) != (r.measure_image.len() == 2) {
        return fail("class C flag disagrees with the measure image");
    }
    if r.is_abelian && r.cd_size != 1 {
        return fail("abelian group with more than one CD member");
    }
    if r.is_maximal_class == Some(true) && r.factorization.first().map_or(0, |f| f.1) >= 3 && r.is_abelian {
        return fail("abelian group of maximal class and order at least p^3");
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructors::*;

    fn an(g: &Group) -> Analysis<'_> {
        Analysis::new(g).unwrap()
    }

    #[test]
    fn class_c_examples() {
        let c5 = cyclic(5).unwrap();
        assert!(in_class_c(&an(&c5)).unwrap());
        let c4 = cyclic(4).unwrap();
        let a = an(&c4);
        assert!(!in_class_c(&a).unwrap());
        assert_eq!(a.cd.image, vec![4, 8, 16]);
        let d8 = dihedral(8).unwrap();
        let a = an(&d8);
        assert!(in_class_c(&a).unwrap());
        assert_eq!(a.cd.image, vec![8, 16]);
        let t = Group::trivial();
        assert!(matches!(in_class_c(&an(&t)), Err(Error::Precondition(_))));
    }

    #[test]
    fn extraspecial_predicate() {
        for g in [dihedral(8).unwrap(), generalized_quaternion(3).unwrap(), heisenberg(3).unwrap()] {
            assert!(is_extraspecial(&an(&g)), "{}", g.label());
        }
        assert!(!is_extraspecial(&an(&cyclic(3).unwrap())));
        assert!(!is_extraspecial(&an(&dihedral(16).unwrap())));
        assert!(!is_extraspecial(&an(&dihedral(6).unwrap())));
    }

    #[test]
    fn outer_abelian() {
        let q8 = generalized_quaternion(3).unwrap();
        let a = an(&q8);
        assert!(is_outer_abelian(&a));
        assert!(is_outer_abelian_by_quotients(&a).unwrap());
        let d16 = dihedral(16).unwrap();
        let a = an(&d16);
        assert!(!is_outer_abelian(&a));
        assert!(!is_outer_abelian_by_quotients(&a).unwrap());
        assert!(!is_outer_abelian(&an(&cyclic(4).unwrap())));
    }

    #[test]
    fn maximal_class() {
        for g in [dihedral(8).unwrap(), dihedral(16).unwrap(), generalized_quaternion(4).unwrap()] {
            assert!(is_maximal_class(&an(&g)).unwrap(), "{}", g.label());
        }
        let e = abelian_of_type(&[2, 2, 2]).unwrap();
        assert!(!is_maximal_class(&an(&e)).unwrap());
        assert!(is_maximal_class(&an(&dihedral(6).unwrap())).is_err());
        assert!(is_maximal_class(&an(&cyclic(2).unwrap())).is_err());
    }

    #[test]
    fn self_centralizing() {
        let d16 = dihedral(16).unwrap();
        let a = an(&d16);
        let w = self_centralizing_p2(&a).unwrap().unwrap();
        assert_eq!(a.sub(w).size(), 4);
        assert_eq!(a.centralizer(w), w);
        let ab = abelian_of_type(&[4, 2]).unwrap();
        assert_eq!(self_centralizing_p2(&an(&ab)).unwrap(), None);
    }

    #[test]
    fn unique_order_p() {
        assert!(unique_subgroup_order_p(&an(&cyclic(9).unwrap())).unwrap());
        assert!(unique_subgroup_order_p(&an(&generalized_quaternion(4).unwrap())).unwrap());
        assert!(!unique_subgroup_order_p(&an(&dihedral(8).unwrap())).unwrap());
        assert!(unique_subgroup_order_p(&an(&cyclic(6).unwrap())).is_err());
    }

    #[test]
    fn fingerprint() {
        assert!(quaternion_fingerprint(&generalized_quaternion(3).unwrap()));
        assert!(quaternion_fingerprint(&generalized_quaternion(5).unwrap()));
        assert!(!quaternion_fingerprint(&dihedral(16).unwrap()));
        assert!(!quaternion_fingerprint(&cyclic(8).unwrap()));
        assert!(!quaternion_fingerprint(&semidihedral(4).unwrap()));
    }

    #[test]
    fn prop26() {
        let d16 = dihedral(16).unwrap();
        let a = an(&d16);
        let w = prop26_witness(&a).unwrap().unwrap();
        assert_eq!(a.sub(w).size(), 8);
        let es = extraspecial(2, 2, ExtraspecialType::Plus).unwrap();
        assert!(!violates_prop26_bound(&an(&es)).unwrap());
        assert!(violates_prop26_bound(&an(&cyclic(8).unwrap())).is_err());
    }

    #[test]
    fn minimal_normals() {
        let q8 = generalized_quaternion(3).unwrap();
        let a = an(&q8);
        assert_eq!(minimal_normal_subgroups(&a), vec![a.center]);
        let v = abelian_of_type(&[2, 2]).unwrap();
        assert_eq!(minimal_normal_subgroups(&an(&v)).len(), 3);
    }

    #[test]
    fn full_reports() {
        let r = classify_full(&smallgroup_32_8().unwrap()).unwrap();
        assert_eq!(r.in_class_c, Some(true));
        assert!(!r.is_extraspecial);
        assert_eq!(r.nilpotence_class, Some(3));
        let r = classify_full(&generalized_quaternion(3).unwrap()).unwrap();
        assert_eq!(r.in_class_c, Some(true));
        assert!(r.is_extraspecial);
        assert_eq!(r.is_maximal_class, Some(true));
        let r = classify_full(&cyclic(6).unwrap()).unwrap();
        assert!(!r.is_p_group);
        assert_eq!(r.in_class_c, Some(false));
        assert_eq!(r.measure_image, vec![6, 12, 18, 36]);
        let text = classify_full(&dihedral(8).unwrap()).unwrap().to_text();
        assert!(text.contains("extraspecial: true"));
        let r = classify_full(&Group::trivial()).unwrap();
        assert_eq!(r.in_class_c, None);
    }
}
