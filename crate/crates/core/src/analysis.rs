//! Everything computed once per group and shared by the classifiers,
//! property checks, and theorem verifiers.

use std::sync::OnceLock;

use crate::arith::prime_power;
use crate::cd::{cd_result, CdResult};
use crate::group::{Group, Subgroup};
use crate::lattice::{enumerate_subgroups_with_limit, SubgroupLattice, DEFAULT_SUBGROUP_LIMIT};
use crate::Result;

pub struct Analysis<'g> {
    pub group: &'g Group,
    pub lattice: SubgroupLattice,
    pub cd: CdResult,
    /// Lattice index of `Z(G)`.
    pub center: usize,
    /// Lattice index of `G'`.
    pub derived: usize,
    pub nilpotence_class: Option<usize>,
    /// `(p, n)` when `|G| = p^n`, `n >= 1`.
    pub prime_power: Option<(u64, u32)>,
    normal: OnceLock<Vec<usize>>,
}

impl<'g> Analysis<'g> {
    pub fn new(group: &'g Group) -> Result<Self> {
        Self::with_subgroup_limit(group, DEFAULT_SUBGROUP_LIMIT)
    }

    pub fn with_subgroup_limit(group: &'g Group, limit: usize) -> Result<Self> {
        let lattice = enumerate_subgroups_with_limit(group, limit)?;
        let cd = cd_result(group, &lattice)?;
        let center = lattice.position(&group.center());
        let derived = lattice.position(&group.commutator_subgroup());
        Ok(Analysis {
            group,
            center,
            derived,
            nilpotence_class: group.nilpotence_class(),
            prime_power: prime_power(group.order() as u64),
            lattice,
            cd,
            normal: OnceLock::new(),
        })
    }

    pub fn order(&self) -> usize {
        self.group.order()
    }

    pub fn sub(&self, i: usize) -> &Subgroup {
        self.lattice.get(i)
    }

    pub fn is_abelian(&self) -> bool {
        self.center == self.lattice.top()
    }

    pub fn is_trivial(&self) -> bool {
        self.order() == 1
    }

    pub fn prime(&self) -> Option<u64> {
        self.prime_power.map(|(p, _)| p)
    }

    /// Subgroup `i` is abelian iff it lies in its own centralizer.
    pub fn is_abelian_subgroup(&self, i: usize) -> bool {
        self.lattice.le(i, self.cd.centralizers[i])
    }

    pub fn centralizer(&self, i: usize) -> usize {
        self.cd.centralizers[i]
    }

    pub fn frattini(&self) -> usize {
        self.lattice.position(&self.lattice.frattini())
    }

    pub fn normal_subgroups(&self) -> &[usize] {
        self.normal
            .get_or_init(|| self.lattice.normal_subgroups(self.group))
    }

    /// Subgroups containing `Z(G)`.
    pub fn above_center(&self) -> Vec<usize> {
        (0..self.lattice.len())
            .filter(|&i| self.lattice.le(self.center, i))
            .collect()
    }
}
