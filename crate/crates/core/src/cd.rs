//! The Chermak-Delgado measure `m_G(H) = |H| |C_G(H)|`, its maximum
//! `m*(G)`, the lattice `CD(G)` of subgroups attaining it, and the least
//! member `M(G)`.

use serde::Serialize;

use crate::group::{Group, Subgroup};
use crate::lattice::{is_sublattice, SubgroupLattice};
use crate::{Error, Result};

/// Measures over a full subgroup lattice. All subgroup references are
/// lattice indices.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CdResult {
    pub measures: Vec<u64>,
    /// Index of `C_G(H)` for every `H`.
    pub centralizers: Vec<usize>,
    /// Distinct measure values, ascending.
    pub image: Vec<u64>,
    pub m_star: u64,
    pub cd_members: Vec<usize>,
    pub cd_min: usize,
}

impl CdResult {
    pub fn is_member(&self, i: usize) -> bool {
        self.measures[i] == self.m_star
    }
}

pub fn cd_measure(g: &Group, h: &Subgroup) -> u64 {
    h.size() as u64 * g.centralizer(h).size() as u64
}

pub fn cd_result(g: &Group, lat: &SubgroupLattice) -> Result<CdResult> {
    if lat.get(lat.top()).size() != g.order() {
        return Err(Error::Precondition("lattice does not belong to this group".into()));
    }
    let n = lat.len();
    let mut measures = Vec::with_capacity(n);
    let mut centralizers = Vec::with_capacity(n);
    for i in 0..n {
        let c = g.centralizer_of_gens(lat.generators(i));
        let ci = lat.index_of(c.bits()).ok_or_else(|| {
            Error::Consistency(format!("centralizer of subgroup {i} missing from lattice"))
        })?;
        centralizers.push(ci);
        measures.push(lat.get(i).size() as u64 * c.size() as u64);
    }
    let mut image = measures.clone();
    image.sort_unstable();
    image.dedup();
    let m_star = *image.last().unwrap();
    let cd_members: Vec<usize> = (0..n).filter(|&i| measures[i] == m_star).collect();

    let mut bits = lat.get(cd_members[0]).bits().clone();
    for &i in &cd_members[1..] {
        bits.intersect_with(lat.get(i).bits());
    }
    let cd_min = lat
        .index_of(&bits)
        .filter(|i| measures[*i] == m_star)
        .ok_or_else(|| Error::Consistency("CD(G) has no least member".into()))?;
    if !is_sublattice(g, lat, &cd_members) {
        return Err(Error::Consistency("CD(G) is not a sublattice".into()));
    }
    Ok(CdResult {
        measures,
        centralizers,
        image,
        m_star,
        cd_members,
        cd_min,
    })
}

/// `M(G)`, checked to be abelian, normal, and to contain `Z(G)`.
pub fn cd_subgroup(g: &Group, lat: &SubgroupLattice, res: &CdResult) -> Result<Subgroup> {
    let m = lat.get(res.cd_min).clone();
    if !m.is_subgroup_of(lat.get(res.centralizers[res.cd_min])) {
        return Err(Error::Consistency("M(G) is not abelian".into()));
    }
    if !g.is_normal(&m) {
        return Err(Error::Consistency("M(G) is not normal".into()));
    }
    if !g.center().is_subgroup_of(&m) {
        return Err(Error::Consistency("M(G) does not contain Z(G)".into()));
    }
    Ok(m)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructors::{cyclic, extraspecial, generalized_quaternion, ExtraspecialType};
    use crate::lattice::enumerate_subgroups;

    fn cd_of(g: &Group) -> (SubgroupLattice, CdResult) {
        let lat = enumerate_subgroups(g).unwrap();
        let res = cd_result(g, &lat).unwrap();
        (lat, res)
    }

    #[test]
    fn measure_basics() {
        let q8 = generalized_quaternion(3).unwrap();
        assert_eq!(cd_measure(&q8, &q8.trivial_subgroup()), 8);
        assert_eq!(cd_measure(&q8, &q8.whole()), 8 * 2);
        let q16 = generalized_quaternion(4).unwrap();
        let a = (0..16).find(|&x| q16.order_of(x) == 8).unwrap();
        assert_eq!(cd_measure(&q16, &q16.closure([a])), 64);
    }

    #[test]
    fn q8_lattice() {
        let q8 = generalized_quaternion(3).unwrap();
        let (lat, res) = cd_of(&q8);
        assert_eq!(res.m_star, 16);
        assert_eq!(res.cd_members.len(), 5);
        assert_eq!(res.image, vec![8, 16]);
        let m = cd_subgroup(&q8, &lat, &res).unwrap();
        assert_eq!(m, q8.center());
    }

    #[test]
    fn prime_cyclic_and_abelian() {
        let c5 = cyclic(5).unwrap();
        let (lat, res) = cd_of(&c5);
        assert_eq!(res.image, vec![5, 25]);
        assert_eq!(res.cd_members, vec![lat.top()]);
        let c12 = cyclic(12).unwrap();
        let (lat, res) = cd_of(&c12);
        assert_eq!(cd_subgroup(&c12, &lat, &res).unwrap().size(), 12);
        let (_, res) = cd_of(&crate::Group::trivial());
        assert_eq!(res.image, vec![1]);
    }

    #[test]
    fn extraspecial_minimum_is_center() {
        let g = extraspecial(3, 1, ExtraspecialType::Minus).unwrap();
        let (lat, res) = cd_of(&g);
        assert_eq!(cd_subgroup(&g, &lat, &res).unwrap(), g.center());
        assert_eq!(res.image, vec![27, 81]);
    }
}
