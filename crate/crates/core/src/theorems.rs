//! Per-group checks for each verifiable statement. A check either does not
//! apply to the group, passes, or reports a violation with witness data.

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::analysis::Analysis;
use crate::classify::{
    in_class_c, is_extraspecial, is_maximal_class, is_outer_abelian, is_outer_abelian_by_quotients,
    minimal_normal_subgroups, prop26_witness, quaternion_fingerprint, self_centralizing_p2,
    unique_subgroup_order_p,
};
use crate::properties::{check_p1, check_p2, check_p3, check_p4, check_p5, check_p6};
use crate::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum TheoremId {
    P1,
    P2,
    P3,
    P4,
    P5,
    P6,
    L1_1,
    L1_2,
    L1_3,
    L1_4,
    T2_1,
    C2_2,
    C2_3,
    ItemsAbc,
    C2_4,
    T2_5,
    P2_6,
    C2_7,
    T2_8,
    T2_9,
}

impl TheoremId {
    pub const ALL: [TheoremId; 20] = [
        TheoremId::P1,
        TheoremId::P2,
        TheoremId::P3,
        TheoremId::P4,
        TheoremId::P5,
        TheoremId::P6,
        TheoremId::L1_1,
        TheoremId::L1_2,
        TheoremId::L1_3,
        TheoremId::L1_4,
        TheoremId::T2_1,
        TheoremId::C2_2,
        TheoremId::C2_3,
        TheoremId::ItemsAbc,
        TheoremId::C2_4,
        TheoremId::T2_5,
        TheoremId::P2_6,
        TheoremId::C2_7,
        TheoremId::T2_8,
        TheoremId::T2_9,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            TheoremId::P1 => "P1",
            TheoremId::P2 => "P2",
            TheoremId::P3 => "P3",
            TheoremId::P4 => "P4",
            TheoremId::P5 => "P5",
            TheoremId::P6 => "P6",
            TheoremId::L1_1 => "L1.1",
            TheoremId::L1_2 => "L1.2",
            TheoremId::L1_3 => "L1.3",
            TheoremId::L1_4 => "L1.4",
            TheoremId::T2_1 => "T2.1",
            TheoremId::C2_2 => "C2.2",
            TheoremId::C2_3 => "C2.3",
            TheoremId::ItemsAbc => "items-abc",
            TheoremId::C2_4 => "C2.4",
            TheoremId::T2_5 => "T2.5",
            TheoremId::P2_6 => "P2.6",
            TheoremId::C2_7 => "C2.7",
            TheoremId::T2_8 => "T2.8",
            TheoremId::T2_9 => "T2.9",
        }
    }

    pub fn description(self) -> &'static str {
        match self {
            TheoremId::P1 => "m(H) <= m(C(H)), equality iff H = C(C(H))",
            TheoremId::P2 => "m(H)m(K) <= m(<H,K>)m(H^K) with the setwise equality criterion",
            TheoremId::P3 => "H in CD(G) implies C(H) in CD(G) and C(C(H)) = H",
            TheoremId::P4 => "M(G) is abelian, normal, contains Z(G)",
            TheoremId::P5 => "CD(G) is a modular sublattice",
            TheoremId::P6 => "nontrivial G has at least two measure values",
            TheoremId::L1_1 => "order p^4 has an abelian subgroup of order p^3",
            TheoremId::L1_2 => "unique subgroup of order p iff cyclic or generalized quaternion",
            TheoremId::L1_3 => "outer abelian iff |G'| = p and Z(G) cyclic",
            TheoremId::L1_4 => "maximal class iff a self-centralizing subgroup of order p^2 exists",
            TheoremId::T2_1 => "G in C implies |Z(G)| prime",
            TheoremId::C2_2 => "abelian G is in C iff cyclic of prime order",
            TheoremId::C2_3 => "G in C implies G is a p-group",
            TheoremId::ItemsAbc => "non-abelian p-groups in C: image, minimal normal, HZ in CD",
            TheoremId::C2_4 => "non-abelian G in C has CD(G) != {Z(G), G}",
            TheoremId::T2_5 => "extraspecial groups are in C with CD(G) = {H >= Z}",
            TheoremId::P2_6 => "large abelian subgroup excludes G from C",
            TheoremId::C2_7 => "no non-abelian group of order p^4 or 64 is in C",
            TheoremId::T2_8 => "class 2 and in C implies extraspecial",
            TheoremId::T2_9 => "maximal class and in C implies non-abelian of order p^3",
        }
    }
}

impl fmt::Display for TheoremId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for TheoremId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        TheoremId::ALL
            .into_iter()
            .find(|t| t.as_str().eq_ignore_ascii_case(s))
            .ok_or_else(|| Error::Precondition(format!("unknown theorem id `{s}`")))
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Outcome {
    NotApplicable,
    Pass,
    Violation(String),
}

impl Outcome {
    fn from_list(v: Vec<String>) -> Outcome {
        if v.is_empty() {
            Outcome::Pass
        } else {
            Outcome::Violation(v.join("; "))
        }
    }

    fn expect(ok: bool, detail: impl FnOnce() -> String) -> Outcome {
        if ok {
            Outcome::Pass
        } else {
            Outcome::Violation(detail())
        }
    }
}

pub fn check(id: TheoremId, a: &Analysis) -> Result<Outcome> {
    use TheoremId::*;
    let nontrivial = !a.is_trivial();
    let pg = a.prime_power.filter(|_| nontrivial);
    let out = match id {
        P1 => Outcome::from_list(check_p1(a)),
        P2 => Outcome::from_list(check_p2(a)),
        P3 => Outcome::from_list(check_p3(a)),
        P4 => Outcome::from_list(check_p4(a)),
        P5 => Outcome::from_list(check_p5(a)),
        P6 if nontrivial => Outcome::from_list(check_p6(a)),
        L1_1 => match pg {
            Some((p, 4)) => {
                let p3 = (p * p * p) as usize;
                Outcome::expect(
                    a.lattice.of_size(p3).any(|i| a.is_abelian_subgroup(i)),
                    || format!("no abelian subgroup of order {p3}"),
                )
            }
            _ => Outcome::NotApplicable,
        },
        L1_2 if pg.is_some() => {
            let lhs = unique_subgroup_order_p(a)?;
            let cyclic = a.group.is_cyclic();
            let quaternion = quaternion_fingerprint(a.group);
            Outcome::expect(lhs == (cyclic || quaternion), || {
                format!("unique order-p subgroup {lhs}, cyclic {cyclic}, quaternion fingerprint {quaternion}")
            })
        }
        L1_3 => match pg {
            Some((p, _)) => {
                let outer = is_outer_abelian(a);
                let by_quotients = is_outer_abelian_by_quotients(a)?;
                let derived_p = a.sub(a.derived).size() as u64 == p;
                let z = a.sub(a.center);
                let z_cyclic = z.elements().iter().any(|&x| a.group.order_of(x) == z.size());
                let mut v = Vec::new();
                if outer != by_quotients {
                    v.push(format!("normal-subgroup test {outer} but quotient test {by_quotients}"));
                }
                if outer != (derived_p && z_cyclic) {
                    v.push(format!("outer abelian {outer}, |G'| = p {derived_p}, Z cyclic {z_cyclic}"));
                }
                Outcome::from_list(v)
            }
            None => Outcome::NotApplicable,
        },
        L1_4 => match pg {
            Some((_, n)) if n >= 3 => {
                let maximal = is_maximal_class(a)?;
                let witness = self_centralizing_p2(a)?;
                Outcome::expect(maximal == witness.is_some(), || {
                    format!("maximal class {maximal}, self-centralizing p^2 witness {witness:?}")
                })
            }
            _ => Outcome::NotApplicable,
        },
        T2_1 if nontrivial && in_class_c(a)? => {
            let z = a.sub(a.center).size() as u64;
            Outcome::expect(crate::arith::is_prime(z), || format!("|Z(G)| = {z}"))
        }
        C2_2 if nontrivial && a.is_abelian() => {
            let in_c = in_class_c(a)?;
            let prime_cyclic = crate::arith::is_prime(a.order() as u64);
            Outcome::expect(in_c == prime_cyclic, || {
                format!("abelian, in C {in_c}, image {:?}", a.cd.image)
            })
        }
        C2_3 if nontrivial && in_class_c(a)? => {
            Outcome::expect(pg.is_some(), || format!("order {} is not a prime power", a.order()))
        }
        ItemsAbc if pg.is_some() && !a.is_abelian() && in_class_c(a)? => check_items_abc(a),
        C2_4 if pg.is_some() && !a.is_abelian() && in_class_c(a)? => {
            let members = &a.cd.cd_members;
            let degenerate = members.len() == 2
                && members.contains(&a.center)
                && members.contains(&a.lattice.top());
            Outcome::expect(!degenerate, || "CD(G) = {Z(G), G}".into())
        }
        T2_5 if is_extraspecial(a) => check_extraspecial(a),
        P2_6 if pg.is_some() && !a.is_abelian() => match prop26_witness(a)? {
            Some(w) if in_class_c(a)? => Outcome::Violation(format!(
                "abelian subgroup of order {} yet in C",
                a.sub(w).size()
            )),
            Some(_) => Outcome::Pass,
            None => Outcome::NotApplicable,
        },
        C2_7 => match pg {
            Some((p, n)) if !a.is_abelian() && (n == 4 || (p == 2 && n == 6)) => {
                Outcome::expect(!in_class_c(a)?, || format!("in C with image {:?}", a.cd.image))
            }
            _ => Outcome::NotApplicable,
        },
        T2_8 if pg.is_some() && a.nilpotence_class == Some(2) && in_class_c(a)? => {
            Outcome::expect(is_extraspecial(a), || "class 2 and in C but not extraspecial".into())
        }
        T2_9 => match pg {
            Some((_, n)) if n >= 2 && is_maximal_class(a)? && in_class_c(a)? => {
                Outcome::expect(n == 3 && !a.is_abelian(), || {
                    format!("maximal class in C with order p^{n}, abelian {}", a.is_abelian())
                })
            }
            _ => Outcome::NotApplicable,
        },
        _ => Outcome::NotApplicable,
    };
    Ok(out)
}

fn check_items_abc(a: &Analysis) -> Outcome {
    let (p, n) = a.prime_power.expect("p-group");
    let pn = checked_pow_u64(p, n);
    let mut v = Vec::new();
    if a.cd.image != [pn, pn * p] {
        v.push(format!("(a) image {:?} != [{pn}, {}]", a.cd.image, pn * p));
    }
    let minimal = minimal_normal_subgroups(a);
    if minimal != [a.center] {
        v.push(format!("(b) minimal normal subgroups {minimal:?}, center {}", a.center));
    }
    let lat = &a.lattice;
    if !(lat.le(a.center, a.derived) && lat.le(a.derived, a.frattini())) {
        v.push("(b) Z <= G' <= Phi fails".into());
    }
    for h in 0..lat.len() {
        if !lat.le(a.center, h) {
            let hz = lat.join(a.group, h, a.center);
            if !a.cd.is_member(hz) {
                v.push(format!("(c) HZ not in CD(G) for H{h}"));
            }
        }
    }
    Outcome::from_list(v)
}

fn check_extraspecial(a: &Analysis) -> Outcome {
    let mut v = Vec::new();
    let (p, n) = a.prime_power.expect("p-group");
    let pn = checked_pow_u64(p, n);
    if a.cd.image != [pn, pn * p] {
        v.push(format!("image {:?} != [{pn}, {}]", a.cd.image, pn * p));
    }
    let above = a.above_center();
    if a.cd.cd_members != above {
        v.push(format!(
            "CD(G) has {} members, {} subgroups contain Z",
            a.cd.cd_members.len(),
            above.len()
        ));
    }
    for h in 0..a.lattice.len() {
        if !a.lattice.le(a.center, h) && a.cd.measures[h] != pn {
            v.push(format!("m(H{h}) = {} != |G|", a.cd.measures[h]));
        }
    }
    Outcome::from_list(v)
}

fn checked_pow_u64(p: u64, n: u32) -> u64 {
    crate::arith::checked_pow(p, n).expect("group order fits in u64")
}
